#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "moviepop/dataset.hpp"
#include "moviepop/learners/distribution.hpp"
#include "moviepop/learners/feature_table.hpp"
#include "moviepop/learners/params.hpp"

namespace moviepop {

/// Gains at or below this are treated as zero.
inline constexpr double kMinGain = 1e-10;
/// Tolerance used when comparing candidate splits for ties.
inline constexpr double kTieTolerance = 1e-12;

/// Binary numeric split: value <= threshold goes low, > goes high.
struct Split {
  std::size_t attribute = 0;  // schema index
  double threshold = 0;
  double gain = 0;        // bits
  double gain_ratio = 0;

  bool operator==(const Split&) const = default;
};

ClassDistribution distribution_of(const FeatureTable& table, std::span<const WeightedRow> rows);

/// Best threshold for one feature slot. Candidates are midpoints between
/// consecutive distinct known values; each side must carry at least
/// `min_branch` known weight. Gain is measured on the known-value rows and
/// scaled by their share of the total weight. Ties keep the lowest
/// threshold; nullopt when no candidate has positive gain.
std::optional<Split> numeric_split_gain(const FeatureTable& table,
                                        std::span<const WeightedRow> rows, std::size_t slot,
                                        double min_branch = 2.0);

/// C4.5 selection: among features whose gain reaches the mean gain of the
/// positive-gain features, the best gain ratio (or gain when
/// use_gain_ratio is off); ties go to the lower schema index.
std::optional<Split> best_split(const FeatureTable& table, std::span<const WeightedRow> rows,
                                const LearnerParams& params);

/// Dataset conveniences with unit weights. `attribute` is a schema index.
std::optional<Split> numeric_split_gain(const Dataset& dataset, std::size_t attribute,
                                        double min_branch = 2.0);
std::optional<Split> best_split(const Dataset& dataset, const LearnerParams& params);

}  // namespace moviepop

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "moviepop/dataset.hpp"

namespace moviepop {

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool missing(double v) { return std::isnan(v); }

/// Dense row-major copy of a dataset's feature columns. Missing cells (and
/// text cells) are NaN. Slots index the feature columns; attribute() maps a
/// slot back to its schema index.
class FeatureTable {
 public:
  explicit FeatureTable(const Dataset& dataset);

  std::size_t rows() const { return labels_.size(); }
  std::size_t slots() const { return attributes_.size(); }
  std::size_t attribute(std::size_t slot) const { return attributes_[slot]; }
  /// Slot of a schema index, or slots() when it is not a feature.
  std::size_t slot_of(std::size_t attribute) const;

  double value(std::size_t row, std::size_t slot) const { return values_[row * slots() + slot]; }
  PopularityClass label(std::size_t row) const { return labels_[row]; }
  std::span<const PopularityClass> labels() const { return labels_; }

 private:
  std::vector<std::size_t> attributes_;
  std::vector<double> values_;
  std::vector<PopularityClass> labels_;
};

struct WeightedRow {
  std::size_t row = 0;
  double weight = 1.0;
};

std::vector<WeightedRow> all_rows(const FeatureTable& table);

/// Cell of an instance as a double, NaN when missing or not numeric.
inline double numeric_cell(const Instance& instance, std::size_t attribute) {
  if (const double* d = std::get_if<double>(&instance.values[attribute])) return *d;
  return kMissing;
}

}  // namespace moviepop

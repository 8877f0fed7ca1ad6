#pragma once

#include <cstddef>
#include <cstdint>

namespace moviepop {

struct LearnerParams {
  /// Minimum (known-value) weight on each side of a split.
  std::size_t min_leaf = 2;
  /// Share of each training set held out for reduced-error pruning.
  double prune_fraction = 1.0 / 3.0;
  std::uint64_t seed = 1;
  bool use_gain_ratio = true;
  bool reduced_error_pruning = true;

  /// Throws ParameterError unless 0 < prune_fraction < 1 and min_leaf >= 1.
  void validate() const;

  bool operator==(const LearnerParams&) const = default;
};

}  // namespace moviepop

#pragma once

#include <array>
#include <span>

#include "moviepop/popularity.hpp"

namespace moviepop {

/// Class weights in label order. Weights may be fractional when instances
/// with a missing split value are spread over both branches.
struct ClassDistribution {
  std::array<double, kClassCount> weights{};

  double total() const;
  double operator[](PopularityClass c) const { return weights[index_of(c)]; }
  void add(PopularityClass c, double w) { weights[index_of(c)] += w; }

  /// Label with the largest weight; ties go to the earlier label.
  PopularityClass majority() const;
  /// Non-zero weight in at most one class.
  bool pure() const;
  std::size_t present_classes() const;

  bool operator==(const ClassDistribution&) const = default;
};

/// Shannon entropy in bits over the non-zero proportions. Throws
/// DomainError when the total weight is not positive.
double entropy(const ClassDistribution& dist);

/// Entropy of an arbitrary list of non-negative weights; 0 for zero total.
double entropy_of(std::span<const double> weights);

}  // namespace moviepop

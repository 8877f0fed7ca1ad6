#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moviepop/dataset.hpp"
#include "moviepop/learners/params.hpp"
#include "moviepop/popularity.hpp"

namespace moviepop {

/// Rows are actual labels, columns predicted, both in label order.
class ConfusionMatrix {
 public:
  using Cells = std::array<std::array<std::uint64_t, kClassCount>, kClassCount>;

  ConfusionMatrix() = default;
  explicit ConfusionMatrix(const Cells& cells) : cells_(cells) {}

  void add(PopularityClass actual, PopularityClass predicted, std::uint64_t n = 1) {
    cells_[index_of(actual)][index_of(predicted)] += n;
  }
  std::uint64_t at(PopularityClass actual, PopularityClass predicted) const {
    return cells_[index_of(actual)][index_of(predicted)];
  }
  const Cells& cells() const { return cells_; }

  std::uint64_t row_sum(PopularityClass actual) const;
  std::uint64_t column_sum(PopularityClass predicted) const;
  std::uint64_t trace() const;
  std::uint64_t total() const;

  bool operator==(const ConfusionMatrix&) const = default;

 private:
  Cells cells_{};
};

struct ClassMetrics {
  double tp_rate = 0;
  double fp_rate = 0;
  double precision = 0;
  double recall = 0;
  bool operator==(const ClassMetrics&) const = default;
};

struct MatrixMetrics {
  std::array<ClassMetrics, kClassCount> per_class{};
  double accuracy = 0;
};

/// Per-class TP rate (= recall), FP rate and precision from a single
/// matrix; undefined ratios are reported as 0. Throws DomainError on an
/// empty matrix.
MatrixMetrics metrics_from_matrix(const ConfusionMatrix& matrix);

enum class LearnerKind { C45, Part };

std::string_view to_string(LearnerKind kind);
std::optional<LearnerKind> learner_from_string(std::string_view s);

struct EvalReport {
  LearnerKind learner = LearnerKind::C45;
  std::size_t folds = 10;
  std::uint64_t seed = 1;
  LearnerParams params;
  ConfusionMatrix matrix;
  std::array<ClassMetrics, kClassCount> per_class{};
  double accuracy = 0;
  std::vector<std::string> warnings;

  bool operator==(const EvalReport&) const = default;
};

/// k disjoint index sets covering 0..labels.size()-1. Each class is
/// shuffled with the seed and dealt round-robin, continuing the deal across
/// classes, so per-class counts differ by at most one between folds. Index
/// sets are sorted. Throws ParameterError when k < 2 or k > size.
std::vector<std::vector<std::size_t>> stratified_folds(std::span<const PopularityClass> labels,
                                                       std::size_t k, std::uint64_t seed);
std::vector<std::vector<std::size_t>> stratified_folds(const Dataset& dataset, std::size_t k,
                                                       std::uint64_t seed);

/// k-fold cross-validation accumulating one prediction per instance into a
/// single confusion matrix. Fold i trains with the learner seed derived
/// from (params.seed, i).
EvalReport cross_validate(LearnerKind learner, const Dataset& dataset, std::size_t k,
                          std::uint64_t seed, const LearnerParams& params);

}  // namespace moviepop

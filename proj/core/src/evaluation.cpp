#include "moviepop/evaluation.hpp"

#include <algorithm>
#include <functional>
#include <memory>

#include <fmt/format.h>

#include "moviepop/errors.hpp"
#include "moviepop/learners/part.hpp"
#include "moviepop/learners/tree.hpp"
#include "moviepop/random.hpp"

namespace moviepop {

std::uint64_t ConfusionMatrix::row_sum(PopularityClass actual) const {
  std::uint64_t s = 0;
  for (auto v : cells_[index_of(actual)]) s += v;
  return s;
}

std::uint64_t ConfusionMatrix::column_sum(PopularityClass predicted) const {
  std::uint64_t s = 0;
  for (const auto& row : cells_) s += row[index_of(predicted)];
  return s;
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < kClassCount; ++i) s += cells_[i][i];
  return s;
}

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t s = 0;
  for (const auto& row : cells_) {
    for (auto v : row) s += v;
  }
  return s;
}

MatrixMetrics metrics_from_matrix(const ConfusionMatrix& matrix) {
  const std::uint64_t total = matrix.total();
  if (total == 0) throw DomainError("metrics of an empty confusion matrix");
  auto ratio = [](std::uint64_t num, std::uint64_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  MatrixMetrics out;
  for (auto c : kAllClasses) {
    const std::uint64_t tp = matrix.at(c, c);
    const std::uint64_t fn = matrix.row_sum(c) - tp;
    const std::uint64_t fp = matrix.column_sum(c) - tp;
    const std::uint64_t tn = total - tp - fn - fp;
    ClassMetrics& m = out.per_class[index_of(c)];
    m.tp_rate = ratio(tp, tp + fn);
    m.recall = m.tp_rate;
    m.fp_rate = ratio(fp, fp + tn);
    m.precision = ratio(tp, tp + fp);
  }
  out.accuracy = ratio(matrix.trace(), total);
  return out;
}

std::string_view to_string(LearnerKind kind) {
  return kind == LearnerKind::C45 ? "c45" : "part";
}

std::optional<LearnerKind> learner_from_string(std::string_view s) {
  if (s == "c45") return LearnerKind::C45;
  if (s == "part") return LearnerKind::Part;
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> stratified_folds(std::span<const PopularityClass> labels,
                                                       std::size_t k, std::uint64_t seed) {
  if (k < 2) throw ParameterError("cross-validation needs at least 2 folds");
  if (k > labels.size()) {
    throw ParameterError(
        fmt::format("{} folds requested for {} instances", k, labels.size()));
  }
  std::array<std::vector<std::size_t>, kClassCount> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[index_of(labels[i])].push_back(i);

  Rng rng(seed);
  std::vector<std::vector<std::size_t>> folds(k);
  std::size_t deal = 0;
  for (auto& members : by_class) {
    rng.shuffle(std::span<std::size_t>(members));
    for (std::size_t i : members) folds[deal++ % k].push_back(i);
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

std::vector<std::vector<std::size_t>> stratified_folds(const Dataset& dataset, std::size_t k,
                                                       std::uint64_t seed) {
  std::vector<PopularityClass> labels;
  labels.reserve(dataset.size());
  for (const auto& inst : dataset.instances()) labels.push_back(inst.label);
  return stratified_folds(labels, k, seed);
}

EvalReport cross_validate(LearnerKind learner, const Dataset& dataset, std::size_t k,
                          std::uint64_t seed, const LearnerParams& params) {
  params.validate();
  if (dataset.empty()) throw ParameterError("cannot cross-validate an empty dataset");
  EvalReport report;
  report.learner = learner;
  report.folds = k;
  report.seed = seed;
  report.params = params;

  const auto folds = stratified_folds(dataset, k, seed);
  std::vector<bool> in_test(dataset.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::fill(in_test.begin(), in_test.end(), false);
    for (std::size_t i : folds[f]) in_test[i] = true;
    std::vector<std::size_t> train_idx;
    for (std::size_t i = 0; i < dataset.size(); ++i) {
      if (!in_test[i]) train_idx.push_back(i);
    }
    const Dataset train = dataset.subset(train_idx);
    const auto train_counts = train.class_counts();
    for (std::size_t i : folds[f]) {
      auto label = dataset.instances()[i].label;
      if (train_counts[index_of(label)] == 0) {
        std::string w = fmt::format("fold {}: class {} absent from training data", f + 1,
                                    to_string(label));
        if (std::find(report.warnings.begin(), report.warnings.end(), w) == report.warnings.end()) {
          report.warnings.push_back(std::move(w));
        }
      }
    }

    LearnerParams fold_params = params;
    fold_params.seed = mix_seed(params.seed, f);
    std::function<PopularityClass(const Instance&)> predict;
    if (learner == LearnerKind::C45) {
      auto tree = std::make_shared<DecisionTree>(train_c45(train, fold_params));
      predict = [tree](const Instance& x) { return tree->classify(x).first; };
    } else {
      auto rules = std::make_shared<RuleList>(part_learn(train, fold_params));
      predict = [rules](const Instance& x) { return rules->classify(x); };
    }
    for (std::size_t i : folds[f]) {
      const Instance& x = dataset.instances()[i];
      report.matrix.add(x.label, predict(x));
    }
  }
  const MatrixMetrics m = metrics_from_matrix(report.matrix);
  report.per_class = m.per_class;
  report.accuracy = m.accuracy;
  return report;
}

}  // namespace moviepop

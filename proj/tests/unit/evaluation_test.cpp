#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "moviepop/errors.hpp"
#include "moviepop/evaluation.hpp"

namespace moviepop {
namespace {

using PC = PopularityClass;

struct Expected {
  double tp, fp, precision;
};

void expect_table(const ConfusionMatrix& m, const std::array<Expected, 4>& rows, double accuracy) {
  MatrixMetrics r = metrics_from_matrix(m);
  for (std::size_t c = 0; c < 4; ++c) {
    EXPECT_NEAR(r.per_class[c].tp_rate, rows[c].tp, 0.001) << c;
    EXPECT_NEAR(r.per_class[c].fp_rate, rows[c].fp, 0.001) << c;
    EXPECT_NEAR(r.per_class[c].precision, rows[c].precision, 0.001) << c;
    EXPECT_EQ(r.per_class[c].recall, r.per_class[c].tp_rate);
  }
  EXPECT_NEAR(r.accuracy * 100, accuracy, 5e-5);
}

TEST(Metrics, C45PublishedMatrix) {
  ConfusionMatrix m = testing::c45_published_matrix();
  EXPECT_EQ(m.trace(), 632u);
  EXPECT_EQ(m.total(), 817u);
  expect_table(m, {{{0.861, 0.086, 0.823}, {0.69, 0.162, 0.65}, {0.774, 0.083, 0.835},
                    {0.682, 0.001, 0.938}}},
               77.3562);
}

TEST(Metrics, PartPublishedMatrix) {
  ConfusionMatrix m = testing::part_published_matrix();
  EXPECT_EQ(m.trace(), 635u);
  expect_table(m, {{{0.826, 0.063, 0.859}, {0.694, 0.156, 0.659}, {0.819, 0.108, 0.805},
                    {0.591, 0.001, 0.929}}},
               77.7234);
}

TEST(Metrics, IdentityAndEmptyColumn) {
  ConfusionMatrix id({{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  MatrixMetrics r = metrics_from_matrix(id);
  for (const auto& c : r.per_class) {
    EXPECT_EQ(c, (ClassMetrics{1, 0, 1, 1}));
  }
  EXPECT_EQ(r.accuracy, 1.0);
  ConfusionMatrix never({{{3, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}});
  MatrixMetrics n = metrics_from_matrix(never);
  EXPECT_EQ(n.per_class[1].precision, 0.0);
  EXPECT_EQ(n.per_class[2].tp_rate, 0.0);
  EXPECT_THROW(metrics_from_matrix(ConfusionMatrix{}), DomainError);
}

TEST(Metrics, RandomMatricesSatisfyIdentities) {
  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    ConfusionMatrix::Cells cells{};
    for (auto& row : cells) {
      for (auto& v : row) v = rng.below(50);
    }
    cells[0][0] += 1;
    ConfusionMatrix m(cells);
    MatrixMetrics r = metrics_from_matrix(m);
    EXPECT_LE(m.trace(), m.total());
    for (auto c : kAllClasses) {
      const auto& k = r.per_class[index_of(c)];
      const auto tp = m.at(c, c);
      EXPECT_EQ(k.recall, k.tp_rate);
      if (m.row_sum(c) > 0) {
        EXPECT_EQ(std::llround(k.tp_rate * static_cast<double>(m.row_sum(c))), static_cast<long long>(tp));
      }
      if (m.column_sum(c) > 0) {
        EXPECT_NEAR(k.precision, double(tp) / double(m.column_sum(c)), 1e-15);
      }
      for (double v : {k.tp_rate, k.fp_rate, k.precision}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
    }
  }
}

void expect_stratified(const std::vector<PC>& labels, std::size_t k, std::uint64_t seed) {
  auto folds = stratified_folds(labels, k, seed);
  ASSERT_EQ(folds.size(), k);
  std::set<std::size_t> seen;
  std::size_t total = 0;
  for (const auto& f : folds) {
    total += f.size();
    seen.insert(f.begin(), f.end());
  }
  EXPECT_EQ(total, labels.size());
  EXPECT_EQ(seen.size(), labels.size());
  for (auto c : kAllClasses) {
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& f : folds) {
      std::size_t n = 0;
      for (auto i : f) n += labels[i] == c;
      lo = std::min(lo, n);
      hi = std::max(hi, n);
    }
    EXPECT_LE(hi - lo, 1u);
  }
}

TEST(StratifiedFolds, Examples) {
  std::vector<PC> labels;
  for (auto c : kAllClasses) labels.insert(labels.end(), 5, c);
  auto folds = stratified_folds(labels, 5, 1);
  for (const auto& f : folds) {
    std::array<int, 4> n{};
    for (auto i : f) ++n[index_of(labels[i])];
    EXPECT_EQ(n, (std::array<int, 4>{1, 1, 1, 1}));
  }
  auto two = stratified_folds(std::vector<PC>{PC::Excellent, PC::Excellent, PC::Poor, PC::Poor}, 2, 3);
  for (const auto& f : two) ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(stratified_folds(labels, 5, 1), folds);
}

TEST(StratifiedFolds, RandomLabelSequences) {
  Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    std::vector<PC> labels(10 + rng.below(100));
    for (auto& l : labels) l = class_at(rng.below(4));
    expect_stratified(labels, 2 + rng.below(9), rng.below(100));
  }
}

TEST(StratifiedFolds, Errors) {
  std::vector<PC> labels(3, PC::Poor);
  EXPECT_THROW(stratified_folds(labels, 1, 1), ParameterError);
  EXPECT_THROW(stratified_folds(labels, 4, 1), ParameterError);
}

Dataset separable(std::size_t per_class) {
  std::vector<std::vector<double>> rows;
  std::vector<PC> labels;
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t i = 0; i < per_class; ++i) {
      rows.push_back({static_cast<double>(c * 100 + i), static_cast<double>(i % 3)});
      labels.push_back(class_at(c));
    }
  }
  return testing::numeric_dataset(rows, labels);
}

TEST(CrossValidate, SeparableFixtureIsPerfect) {
  for (auto learner : {LearnerKind::C45, LearnerKind::Part}) {
    EvalReport r = cross_validate(learner, separable(15), 10, 1, LearnerParams{});
    EXPECT_EQ(r.matrix.total(), 60u);
    EXPECT_EQ(r.accuracy, 1.0) << to_string(learner);
  }
}

TEST(CrossValidate, BookkeepingAndDeterminism) {
  Dataset d = testing::director_driven_dataset(150, 4);
  for (std::size_t k : {2u, 5u, 10u}) {
    for (auto learner : {LearnerKind::C45, LearnerKind::Part}) {
      EvalReport a = cross_validate(learner, d, k, 9, LearnerParams{});
      EXPECT_EQ(a.matrix.total(), d.size());
      for (auto c : kAllClasses) EXPECT_EQ(a.matrix.row_sum(c), d.class_counts()[index_of(c)]);
      EXPECT_DOUBLE_EQ(a.accuracy, double(a.matrix.trace()) / double(a.matrix.total()));
      EXPECT_EQ(a, cross_validate(learner, d, k, 9, LearnerParams{}));
    }
  }
}

TEST(CrossValidate, WarnsWhenTrainingLacksAClass) {
  Dataset d = separable(6);
  Dataset lone(d.schema());
  for (const auto& inst : d.instances()) {
    if (inst.label != PC::Terrible) lone.add(inst);
  }
  lone.add(Instance{{999.0, 0.0}, PC::Terrible});
  EvalReport r = cross_validate(LearnerKind::C45, lone, 3, 1, LearnerParams{});
  EXPECT_FALSE(r.warnings.empty());
  EXPECT_EQ(r.matrix.total(), lone.size());
}

TEST(LearnerKind, Strings) {
  EXPECT_EQ(learner_from_string("c45"), LearnerKind::C45);
  EXPECT_EQ(learner_from_string("part"), LearnerKind::Part);
  EXPECT_FALSE(learner_from_string("svm"));
}

}  // namespace
}  // namespace moviepop

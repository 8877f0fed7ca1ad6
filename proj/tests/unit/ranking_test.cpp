#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "moviepop/errors.hpp"
#include "moviepop/learners/ranking.hpp"
#include "oracles.hpp"

namespace moviepop {
namespace {

using PC = PopularityClass;

TEST(RankAttributes, CopyOfClassFirstConstantLast) {
  Rng rng(2);
  std::vector<std::vector<double>> rows;
  std::vector<PC> labels;
  for (int i = 0; i < 40; ++i) {
    PC c = rng.below(3) == 0 ? PC::Excellent : PC::Poor;
    labels.push_back(c);
    rows.push_back({static_cast<double>(rng.below(9)), 4.0, static_cast<double>(index_of(c))});
  }
  Dataset d = testing::numeric_dataset(rows, labels);
  auto ranks = rank_attributes(d);
  ASSERT_EQ(ranks.size(), 3u);
  EXPECT_EQ(ranks.front().name, "f2");
  auto counts = d.class_counts();
  const double h = testing::oracle_entropy({double(counts[0]), double(counts[1]),
                                            double(counts[2]), double(counts[3])});
  EXPECT_NEAR(ranks.front().gain, h, 1e-12);
  EXPECT_NEAR(ranks.front().percent, 100.0, 1e-9);
  EXPECT_EQ(ranks.back().name, "f1");
  EXPECT_EQ(ranks.back().gain, 0.0);
  EXPECT_EQ(ranks.back().percent, 0.0);
}

TEST(RankAttributes, OrderMatchesExhaustiveGains) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Dataset d = testing::random_dataset(rng, 3, 16, 4, 0.0);
    auto ranks = rank_attributes(d);
    ASSERT_EQ(ranks.size(), d.feature_indices().size());
    for (const auto& r : ranks) {
      // Single-attribute view: the oracle with no minimum branch size.
      Dataset only({d.schema()[r.attribute]});
      for (const auto& inst : d.instances()) only.add(Instance{{inst.values[r.attribute]}, inst.label});
      auto o = testing::oracle_best_split(only, 1e-9, false);
      EXPECT_NEAR(r.gain, o ? o->gain : 0.0, 1e-9);
    }
    for (std::size_t i = 1; i < ranks.size(); ++i) {
      EXPECT_GE(ranks[i - 1].gain, ranks[i].gain);
      if (ranks[i - 1].gain == ranks[i].gain) EXPECT_LT(ranks[i - 1].attribute, ranks[i].attribute);
    }
  }
}

TEST(RankAttributes, DirectorRankLeadsOnDirectorDrivenData) {
  auto ranks = rank_attributes(testing::director_driven_dataset(400, 10));
  EXPECT_EQ(ranks.front().name, "director_rank");
}

TEST(RankAttributes, Errors) {
  EXPECT_THROW(rank_attributes(Dataset({{"f", Role::Feature}})), ParameterError);
  Dataset no_features({{"id", Role::Identifier}});
  no_features.add(Instance{{1.0}, PC::Poor});
  EXPECT_THROW(rank_attributes(no_features), ParameterError);
}

}  // namespace
}  // namespace moviepop

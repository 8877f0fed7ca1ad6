#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "moviepop/errors.hpp"
#include "moviepop/learners/model_io.hpp"

namespace moviepop {
namespace {

TEST(ModelIo, TreeRoundTrip) {
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    Dataset d = testing::random_dataset(rng, 5, 80, 4, 0.15);
    LearnerParams p;
    p.seed = static_cast<std::uint64_t>(i);
    DecisionTree t = train_c45(d, p);
    std::string text = render_tree(t, d.schema());
    EXPECT_EQ(parse_tree(text, d.schema()), t) << text;
    EXPECT_EQ(render_tree(parse_tree(text, d.schema()), d.schema()), text);
  }
}

TEST(ModelIo, RulesRoundTrip) {
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    Dataset d = testing::random_dataset(rng, 5, 80, 4, 0.15);
    RuleList r = part_learn(d, LearnerParams{});
    std::string text = render_rules(r, d.schema());
    EXPECT_EQ(parse_rules(text, d.schema()), r) << text;
  }
}

TEST(ModelIo, TreeLayout) {
  Dataset d = testing::numeric_dataset({{1}, {2}, {3}, {4}},
                                       {PopularityClass::Excellent, PopularityClass::Excellent,
                                        PopularityClass::Poor, PopularityClass::Poor});
  LearnerParams p;
  p.reduced_error_pruning = false;
  std::string text = render_tree(grow_tree(d, p), d.schema());
  EXPECT_EQ(text.rfind("f0 <= 2.5 :", 0), 0u) << text;
  EXPECT_NE(text.find("\n  -> Excellent (2/0/0/0)"), std::string::npos) << text;
  EXPECT_NE(text.find("\n  -> Poor (0/0/2/0)"), std::string::npos) << text;
}

TEST(ModelIo, RuleLayout) {
  std::vector<Column> schema{{"a", Role::Feature}, {"b", Role::Feature}};
  RuleList r;
  r.rules.push_back({{{0, Comparison::LessEqual, 1.5}, {1, Comparison::Greater, 2}},
                     PopularityClass::Average, 3, 1});
  r.default_class = PopularityClass::Poor;
  std::string text = render_rules(r, schema);
  EXPECT_EQ(text, "IF a <= 1.5 AND b > 2 THEN Average (3/1)\nDEFAULT Poor\n");
}

TEST(ModelIo, MalformedInputIsFormatError) {
  std::vector<Column> schema{{"a", Role::Feature}};
  EXPECT_THROW(parse_tree("zzz <= 1 : (1/0/0/0) missing=low gain=1 ratio=1\n", schema), FormatError);
  EXPECT_THROW(parse_rules("IF a <= 1 THEN Nope (1/1)\nDEFAULT Poor\n", schema), FormatError);
}

}  // namespace
}  // namespace moviepop

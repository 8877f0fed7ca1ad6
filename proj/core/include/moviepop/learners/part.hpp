#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "moviepop/dataset.hpp"
#include "moviepop/learners/feature_table.hpp"
#include "moviepop/learners/params.hpp"
#include "moviepop/popularity.hpp"

namespace moviepop {

enum class Comparison { LessEqual, Greater };

struct Condition {
  std::size_t attribute = 0;  // schema index
  Comparison op = Comparison::LessEqual;
  double threshold = 0;

  /// A missing value never satisfies a condition.
  bool holds(double value) const;
  bool operator==(const Condition&) const = default;
};

struct Rule {
  std::vector<Condition> conditions;
  PopularityClass conclusion = PopularityClass::Excellent;
  double coverage = 0;  // weight of training instances the rule removed
  double accuracy = 0;  // share of those carrying the conclusion

  bool matches(const Instance& instance) const;
  bool operator==(const Rule&) const = default;
};

/// Ordered rules evaluated first-match, backed by a default class.
struct RuleList {
  std::vector<Rule> rules;
  PopularityClass default_class = PopularityClass::Excellent;

  PopularityClass classify(const Instance& instance) const;
  bool operator==(const RuleList&) const = default;
};

/// Same as RuleList::classify.
PopularityClass classify_rules(const RuleList& rules, const Instance& instance);

/// PART: while instances remain, build a partial C4.5 tree on them (children
/// expanded in order of increasing entropy, expansion stops at the first
/// child that does not end up a leaf, nodes whose children are all leaves
/// are candidates for reduced-error pruning on a held-out share), turn the
/// leaf covering the most remaining instances into a rule and drop what it
/// covers. When the partial tree is a single leaf the loop ends and the
/// remaining majority becomes the default; if rules cover everything the
/// default is the training-set majority.
RuleList part_learn(const FeatureTable& table, std::span<const WeightedRow> rows,
                    const LearnerParams& params);
RuleList part_learn(const Dataset& train, const LearnerParams& params);

}  // namespace moviepop

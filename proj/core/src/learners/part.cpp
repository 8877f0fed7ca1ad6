#include "moviepop/learners/part.hpp"

#include <algorithm>
#include <optional>

#include "moviepop/learners/distribution.hpp"
#include "moviepop/learners/split.hpp"
#include "moviepop/learners/tree.hpp"
#include "moviepop/random.hpp"

namespace moviepop {
namespace {

struct PartialNode {
  ClassDistribution distribution;
  std::optional<Split> split;
  std::size_t low = 0;
  std::size_t high = 0;
  Branch fallback = Branch::Low;
  bool expanded = false;

  bool is_leaf() const { return expanded && !split; }
};

double value_at(const FeatureTable& table, std::size_t row, std::size_t attribute) {
  std::size_t slot = table.slot_of(attribute);
  return slot == table.slots() ? kMissing : table.value(row, slot);
}

class PartialTreeBuilder {
 public:
  PartialTreeBuilder(const FeatureTable& table, const LearnerParams& params, bool prune)
      : table_(table), params_(params), prune_(prune) {}

  void build(std::vector<WeightedRow> grow, std::vector<WeightedRow> prune_rows) {
    nodes_.clear();
    nodes_.push_back(PartialNode{distribution_of(table_, grow), std::nullopt});
    expand(0, grow, prune_rows);
  }

  const std::vector<PartialNode>& nodes() const { return nodes_; }

 private:
  void make_leaf(std::size_t i) {
    nodes_[i].expanded = true;
    nodes_[i].split.reset();
  }

  void expand(std::size_t i, std::span<const WeightedRow> grow,
              std::span<const WeightedRow> prune_rows) {
    const ClassDistribution dist = nodes_[i].distribution;
    if (dist.total() < 2.0 * static_cast<double>(params_.min_leaf) || dist.pure()) {
      make_leaf(i);
      return;
    }
    auto split = best_split(table_, grow, params_);
    if (!split) {
      make_leaf(i);
      return;
    }

    // Growing rows: fractional for missing values.
    std::vector<WeightedRow> grow_low;
    std::vector<WeightedRow> grow_high;
    std::vector<WeightedRow> unknown;
    double low_w = 0;
    double high_w = 0;
    for (const auto& r : grow) {
      double v = value_at(table_, r.row, split->attribute);
      if (missing(v)) {
        unknown.push_back(r);
      } else if (v <= split->threshold) {
        grow_low.push_back(r);
        low_w += r.weight;
      } else {
        grow_high.push_back(r);
        high_w += r.weight;
      }
    }
    const Branch fallback = low_w >= high_w ? Branch::Low : Branch::High;
    for (const auto& r : unknown) {
      grow_low.push_back(WeightedRow{r.row, r.weight * low_w / (low_w + high_w)});
      grow_high.push_back(WeightedRow{r.row, r.weight * high_w / (low_w + high_w)});
    }
    // Pruning rows follow the fallback branch.
    std::vector<WeightedRow> prune_low;
    std::vector<WeightedRow> prune_high;
    for (const auto& r : prune_rows) {
      double v = value_at(table_, r.row, split->attribute);
      Branch b = missing(v) ? fallback : (v <= split->threshold ? Branch::Low : Branch::High);
      (b == Branch::Low ? prune_low : prune_high).push_back(r);
    }

    const std::size_t low = nodes_.size();
    nodes_.push_back(PartialNode{distribution_of(table_, grow_low), std::nullopt});
    const std::size_t high = nodes_.size();
    nodes_.push_back(PartialNode{distribution_of(table_, grow_high), std::nullopt});
    nodes_[i].split = split;
    nodes_[i].low = low;
    nodes_[i].high = high;
    nodes_[i].fallback = fallback;
    nodes_[i].expanded = true;

    const double low_h = entropy_of(nodes_[low].distribution.weights);
    const double high_h = entropy_of(nodes_[high].distribution.weights);
    const bool low_first = low_h <= high_h;
    const std::array<std::size_t, 2> order = low_first ? std::array<std::size_t, 2>{low, high}
                                                       : std::array<std::size_t, 2>{high, low};
    bool all_leaves = true;
    for (std::size_t child : order) {
      if (child == low) {
        expand(low, grow_low, prune_low);
      } else {
        expand(high, grow_high, prune_high);
      }
      if (!nodes_[child].is_leaf()) {
        all_leaves = false;
        break;
      }
    }
    if (!all_leaves || !prune_) return;

    const double as_leaf = errors(nodes_[i].distribution, prune_rows);
    const double as_subtree =
        errors(nodes_[low].distribution, prune_low) + errors(nodes_[high].distribution, prune_high);
    if (as_leaf <= as_subtree + 1e-9) make_leaf(i);
  }

  double errors(const ClassDistribution& dist, std::span<const WeightedRow> rows) const {
    const PopularityClass predicted = dist.majority();
    double e = 0;
    for (const auto& r : rows) {
      if (table_.label(r.row) != predicted) e += r.weight;
    }
    return e;
  }

  const FeatureTable& table_;
  const LearnerParams& params_;
  bool prune_;
  std::vector<PartialNode> nodes_;
};

// Adds a condition, keeping only the tightest bound per attribute and side.
void add_condition(std::vector<Condition>& conditions, Condition c) {
  for (auto& existing : conditions) {
    if (existing.attribute != c.attribute || existing.op != c.op) continue;
    existing.threshold = c.op == Comparison::LessEqual ? std::min(existing.threshold, c.threshold)
                                                       : std::max(existing.threshold, c.threshold);
    return;
  }
  conditions.push_back(c);
}

struct LeafPath {
  std::size_t node;
  std::vector<Condition> conditions;
};

void collect_leaves(const std::vector<PartialNode>& nodes, std::size_t i,
                    std::vector<Condition> path, std::vector<LeafPath>& out) {
  const PartialNode& n = nodes[i];
  if (!n.expanded) return;
  if (n.is_leaf()) {
    out.push_back(LeafPath{i, std::move(path)});
    return;
  }
  std::vector<Condition> low_path = path;
  add_condition(low_path, Condition{n.split->attribute, Comparison::LessEqual, n.split->threshold});
  collect_leaves(nodes, n.low, std::move(low_path), out);
  add_condition(path, Condition{n.split->attribute, Comparison::Greater, n.split->threshold});
  collect_leaves(nodes, n.high, std::move(path), out);
}

bool rule_covers(const FeatureTable& table, std::size_t row,
                 const std::vector<Condition>& conditions) {
  return std::all_of(conditions.begin(), conditions.end(), [&](const Condition& c) {
    return c.holds(value_at(table, row, c.attribute));
  });
}

PopularityClass majority_of(const FeatureTable& table, std::span<const WeightedRow> rows) {
  return distribution_of(table, rows).majority();
}

}  // namespace

bool Condition::holds(double value) const {
  if (missing(value)) return false;
  return op == Comparison::LessEqual ? value <= threshold : value > threshold;
}

bool Rule::matches(const Instance& instance) const {
  return std::all_of(conditions.begin(), conditions.end(), [&](const Condition& c) {
    return c.holds(numeric_cell(instance, c.attribute));
  });
}

PopularityClass RuleList::classify(const Instance& instance) const {
  for (const auto& r : rules) {
    if (r.matches(instance)) return r.conclusion;
  }
  return default_class;
}

PopularityClass classify_rules(const RuleList& rules, const Instance& instance) {
  return rules.classify(instance);
}

RuleList part_learn(const FeatureTable& table, std::span<const WeightedRow> rows,
                    const LearnerParams& params) {
  params.validate();
  RuleList out;
  out.default_class = majority_of(table, rows);
  std::vector<WeightedRow> remaining(rows.begin(), rows.end());
  PartialTreeBuilder builder(table, params, params.reduced_error_pruning);

  for (std::uint64_t iteration = 0; !remaining.empty(); ++iteration) {
    if (params.reduced_error_pruning) {
      HoldoutSplit split = stratified_holdout(table, remaining, params.prune_fraction,
                                              mix_seed(params.seed, iteration));
      builder.build(std::move(split.grow), std::move(split.prune));
    } else {
      builder.build(remaining, {});
    }
    const auto& nodes = builder.nodes();
    if (nodes.front().is_leaf()) {
      out.default_class = majority_of(table, remaining);
      break;
    }

    std::vector<LeafPath> leaves;
    collect_leaves(nodes, 0, {}, leaves);
    const LeafPath* best = nullptr;
    double best_coverage = 0;
    for (const auto& leaf : leaves) {
      double coverage = 0;
      for (const auto& r : remaining) {
        if (rule_covers(table, r.row, leaf.conditions)) coverage += r.weight;
      }
      if (coverage > best_coverage) {
        best = &leaf;
        best_coverage = coverage;
      }
    }
    if (best == nullptr) {
      out.default_class = majority_of(table, remaining);
      break;
    }

    Rule rule;
    rule.conditions = best->conditions;
    rule.conclusion = nodes[best->node].distribution.majority();
    double correct = 0;
    std::vector<WeightedRow> rest;
    for (const auto& r : remaining) {
      if (rule_covers(table, r.row, rule.conditions)) {
        if (table.label(r.row) == rule.conclusion) correct += r.weight;
      } else {
        rest.push_back(r);
      }
    }
    rule.coverage = best_coverage;
    rule.accuracy = correct / best_coverage;
    out.rules.push_back(std::move(rule));
    remaining = std::move(rest);
  }
  return out;
}

RuleList part_learn(const Dataset& train, const LearnerParams& params) {
  FeatureTable table(train);
  return part_learn(table, all_rows(table), params);
}

}  // namespace moviepop

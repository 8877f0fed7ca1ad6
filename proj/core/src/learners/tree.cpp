#include "moviepop/learners/tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "moviepop/random.hpp"

namespace moviepop {
namespace {

struct Partition {
  std::vector<WeightedRow> low;
  std::vector<WeightedRow> high;
  Branch fallback = Branch::Low;
};

// Known rows go by threshold, missing rows are split fractionally.
Partition partition_fractional(const FeatureTable& table, std::span<const WeightedRow> rows,
                               const Split& split) {
  const std::size_t slot = table.slot_of(split.attribute);
  Partition p;
  double low_w = 0;
  double high_w = 0;
  std::vector<WeightedRow> unknown;
  for (const auto& r : rows) {
    double v = table.value(r.row, slot);
    if (missing(v)) {
      unknown.push_back(r);
    } else if (v <= split.threshold) {
      p.low.push_back(r);
      low_w += r.weight;
    } else {
      p.high.push_back(r);
      high_w += r.weight;
    }
  }
  p.fallback = low_w >= high_w ? Branch::Low : Branch::High;
  const double known = low_w + high_w;
  for (const auto& r : unknown) {
    if (known <= 0) break;
    p.low.push_back(WeightedRow{r.row, r.weight * low_w / known});
    p.high.push_back(WeightedRow{r.row, r.weight * high_w / known});
  }
  return p;
}

class Grower {
 public:
  Grower(const FeatureTable& table, const LearnerParams& params) : table_(table), params_(params) {}

  std::size_t grow(std::span<const WeightedRow> rows) {
    const std::size_t index = nodes_.size();
    nodes_.push_back(DecisionTree::Node{distribution_of(table_, rows), std::nullopt});
    const ClassDistribution& dist = nodes_[index].distribution;
    if (dist.total() < 2.0 * static_cast<double>(params_.min_leaf) || dist.pure()) return index;
    auto split = best_split(table_, rows, params_);
    if (!split) return index;
    Partition p = partition_fractional(table_, rows, *split);
    nodes_[index].split = *split;
    nodes_[index].fallback = p.fallback;
    const std::size_t low = grow(p.low);
    const std::size_t high = grow(p.high);
    nodes_[index].low = low;
    nodes_[index].high = high;
    return index;
  }

  std::vector<DecisionTree::Node> take() { return std::move(nodes_); }

 private:
  const FeatureTable& table_;
  const LearnerParams& params_;
  std::vector<DecisionTree::Node> nodes_;
};

double leaf_errors(const ClassDistribution& dist, const FeatureTable& table,
                   std::span<const WeightedRow> rows) {
  const PopularityClass predicted = dist.majority();
  double errors = 0;
  for (const auto& r : rows) {
    if (table.label(r.row) != predicted) errors += r.weight;
  }
  return errors;
}

}  // namespace

DecisionTree::DecisionTree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

std::size_t DecisionTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_leaf(); }));
}

std::size_t DecisionTree::depth() const {
  if (nodes_.empty()) return 0;
  std::function<std::size_t(std::size_t)> walk = [&](std::size_t i) -> std::size_t {
    const Node& n = nodes_[i];
    if (n.is_leaf()) return 0;
    return 1 + std::max(walk(n.low), walk(n.high));
  };
  return walk(0);
}

std::pair<PopularityClass, ClassDistribution> DecisionTree::classify(
    const Instance& instance) const {
  const Node& leaf = nodes_[leaf_for([&](std::size_t a) { return numeric_cell(instance, a); })];
  return {leaf.distribution.majority(), leaf.distribution};
}

DecisionTree grow_tree(const FeatureTable& table, std::span<const WeightedRow> rows,
                       const LearnerParams& params) {
  params.validate();
  Grower g(table, params);
  g.grow(rows);
  return DecisionTree(g.take());
}

DecisionTree grow_tree(const Dataset& train, const LearnerParams& params) {
  FeatureTable table(train);
  return grow_tree(table, all_rows(table), params);
}

double error_count(const DecisionTree& tree, const FeatureTable& table,
                   std::span<const WeightedRow> rows) {
  double errors = 0;
  for (const auto& r : rows) {
    const auto& leaf = tree.nodes()[tree.leaf_for([&](std::size_t a) {
      std::size_t slot = table.slot_of(a);
      return slot == table.slots() ? kMissing : table.value(r.row, slot);
    })];
    if (leaf.distribution.majority() != table.label(r.row)) errors += r.weight;
  }
  return errors;
}

DecisionTree reduced_error_prune(const DecisionTree& tree, const FeatureTable& table,
                                 std::span<const WeightedRow> prune_rows) {
  if (prune_rows.empty() || tree.node_count() == 0) return tree;
  const auto& nodes = tree.nodes();
  std::vector<bool> collapse(nodes.size(), false);

  std::function<double(std::size_t, std::vector<WeightedRow>)> prune =
      [&](std::size_t i, std::vector<WeightedRow> rows) -> double {
    const auto& n = nodes[i];
    const double as_leaf = leaf_errors(n.distribution, table, rows);
    if (n.is_leaf()) return as_leaf;
    const std::size_t slot = table.slot_of(n.split->attribute);
    std::vector<WeightedRow> low;
    std::vector<WeightedRow> high;
    for (const auto& r : rows) {
      double v = slot == table.slots() ? kMissing : table.value(r.row, slot);
      Branch b = missing(v) ? n.fallback : (v <= n.split->threshold ? Branch::Low : Branch::High);
      (b == Branch::Low ? low : high).push_back(r);
    }
    const double as_subtree = prune(n.low, std::move(low)) + prune(n.high, std::move(high));
    if (as_leaf <= as_subtree + 1e-9) {
      collapse[i] = true;
      return as_leaf;
    }
    return as_subtree;
  };
  prune(0, std::vector<WeightedRow>(prune_rows.begin(), prune_rows.end()));

  std::vector<DecisionTree::Node> out;
  std::function<std::size_t(std::size_t)> copy = [&](std::size_t i) -> std::size_t {
    const std::size_t index = out.size();
    out.push_back(nodes[i]);
    if (nodes[i].is_leaf() || collapse[i]) {
      out[index] = DecisionTree::Node{nodes[i].distribution, std::nullopt};
      return index;
    }
    const std::size_t low = copy(nodes[i].low);
    const std::size_t high = copy(nodes[i].high);
    out[index].low = low;
    out[index].high = high;
    return index;
  };
  copy(0);
  return DecisionTree(std::move(out));
}

DecisionTree reduced_error_prune(const DecisionTree& tree, const Dataset& prune_set) {
  FeatureTable table(prune_set);
  return reduced_error_prune(tree, table, all_rows(table));
}

HoldoutSplit stratified_holdout(const FeatureTable& table, std::span<const WeightedRow> rows,
                                double fraction, std::uint64_t seed) {
  std::array<std::vector<std::size_t>, kClassCount> by_class;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    by_class[index_of(table.label(rows[i].row))].push_back(i);
  }
  Rng rng(seed);
  std::vector<bool> held(rows.size(), false);
  for (auto& members : by_class) {
    rng.shuffle(std::span<std::size_t>(members));
    const auto take = static_cast<std::size_t>(
        std::llround(static_cast<double>(members.size()) * fraction));
    for (std::size_t k = 0; k < take && k < members.size(); ++k) held[members[k]] = true;
  }
  HoldoutSplit out;
  for (std::size_t i = 0; i < rows.size(); ++i) (held[i] ? out.prune : out.grow).push_back(rows[i]);
  if (out.grow.empty()) {
    out.grow.assign(rows.begin(), rows.end());
    out.prune.clear();
  }
  return out;
}

DecisionTree train_c45(const FeatureTable& table, std::span<const WeightedRow> rows,
                       const LearnerParams& params) {
  params.validate();
  if (!params.reduced_error_pruning) return grow_tree(table, rows, params);
  HoldoutSplit split = stratified_holdout(table, rows, params.prune_fraction, params.seed);
  DecisionTree tree = grow_tree(table, split.grow, params);
  return reduced_error_prune(tree, table, split.prune);
}

DecisionTree train_c45(const Dataset& train, const LearnerParams& params) {
  FeatureTable table(train);
  return train_c45(table, all_rows(table), params);
}

}  // namespace moviepop

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "moviepop/dataset.hpp"
#include "moviepop/learners/distribution.hpp"
#include "moviepop/learners/feature_table.hpp"
#include "moviepop/learners/params.hpp"
#include "moviepop/learners/split.hpp"

namespace moviepop {

enum class Branch { Low, High };

/// Binary decision tree stored in preorder (node, low subtree, high
/// subtree). Node 0 is the root.
class DecisionTree {
 public:
  struct Node {
    ClassDistribution distribution;  // training weight reaching the node
    std::optional<Split> split;      // empty for leaves
    std::size_t low = 0;
    std::size_t high = 0;
    Branch fallback = Branch::Low;  // taken when the split value is missing

    bool is_leaf() const { return !split.has_value(); }
    bool operator==(const Node&) const = default;
  };

  DecisionTree() = default;
  explicit DecisionTree(std::vector<Node> nodes);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_count() const;
  std::size_t depth() const;

  /// Index of the leaf reached by routing with `value_of(schema index)`;
  /// NaN means missing.
  template <typename ValueOf>
  std::size_t leaf_for(ValueOf&& value_of) const {
    std::size_t i = 0;
    while (!nodes_[i].is_leaf()) {
      const Node& n = nodes_[i];
      const double v = value_of(n.split->attribute);
      Branch b = missing(v) ? n.fallback : (v <= n.split->threshold ? Branch::Low : Branch::High);
      i = b == Branch::Low ? n.low : n.high;
    }
    return i;
  }

  std::pair<PopularityClass, ClassDistribution> classify(const Instance& instance) const;

  bool operator==(const DecisionTree&) const = default;

 private:
  std::vector<Node> nodes_;
};

/// Recursive growth: a node becomes a leaf when its weight is below
/// 2 * min_leaf, when it is pure, or when no split qualifies. Rows missing
/// the split value go to both children with weights proportional to the
/// children's known weight; the heavier child is the fallback branch.
DecisionTree grow_tree(const FeatureTable& table, std::span<const WeightedRow> rows,
                       const LearnerParams& params);
DecisionTree grow_tree(const Dataset& train, const LearnerParams& params);

/// Bottom-up reduced-error pruning: a subtree becomes a leaf (majority of
/// its training distribution) when that leaf makes no more errors on the
/// pruning rows reaching it than the pruned subtree does. An empty pruning
/// set leaves the tree unchanged.
DecisionTree reduced_error_prune(const DecisionTree& tree, const FeatureTable& table,
                                 std::span<const WeightedRow> prune_rows);
DecisionTree reduced_error_prune(const DecisionTree& tree, const Dataset& prune_set);

/// Weighted misclassification count of `tree` on the given rows (missing
/// values follow the fallback branch).
double error_count(const DecisionTree& tree, const FeatureTable& table,
                   std::span<const WeightedRow> rows);

struct HoldoutSplit {
  std::vector<WeightedRow> grow;
  std::vector<WeightedRow> prune;
};

/// Seeded stratified split reserving round(n_c * fraction) rows of each
/// class for pruning. Falls back to growing on everything when the growing
/// part would be empty.
HoldoutSplit stratified_holdout(const FeatureTable& table, std::span<const WeightedRow> rows,
                                double fraction, std::uint64_t seed);

/// C4.5 as used for evaluation: grow on the growing part of a stratified
/// holdout and prune on the rest (or grow on everything when pruning is off).
DecisionTree train_c45(const FeatureTable& table, std::span<const WeightedRow> rows,
                       const LearnerParams& params);
DecisionTree train_c45(const Dataset& train, const LearnerParams& params);

}  // namespace moviepop

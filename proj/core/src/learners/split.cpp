#include "moviepop/learners/split.hpp"

#include <algorithm>
#include <array>

namespace moviepop {

ClassDistribution distribution_of(const FeatureTable& table, std::span<const WeightedRow> rows) {
  ClassDistribution d;
  for (const auto& r : rows) d.add(table.label(r.row), r.weight);
  return d;
}

std::optional<Split> numeric_split_gain(const FeatureTable& table,
                                        std::span<const WeightedRow> rows, std::size_t slot,
                                        double min_branch) {
  struct Point {
    double value;
    std::size_t label;
    double weight;
  };
  std::vector<Point> known;
  known.reserve(rows.size());
  double total_weight = 0;
  for (const auto& r : rows) {
    total_weight += r.weight;
    double v = table.value(r.row, slot);
    if (!missing(v)) known.push_back(Point{v, index_of(table.label(r.row)), r.weight});
  }
  if (known.size() < 2 || total_weight <= 0) return std::nullopt;
  std::stable_sort(known.begin(), known.end(),
                   [](const Point& a, const Point& b) { return a.value < b.value; });
  if (known.front().value == known.back().value) return std::nullopt;

  std::array<double, kClassCount> high{};
  double known_weight = 0;
  for (const auto& p : known) {
    high[p.label] += p.weight;
    known_weight += p.weight;
  }
  const double base = entropy_of(high);
  std::array<double, kClassCount> low{};
  double low_weight = 0;

  std::optional<Split> best;
  double best_low_weight = 0;
  for (std::size_t i = 0; i + 1 < known.size(); ++i) {
    low[known[i].label] += known[i].weight;
    high[known[i].label] -= known[i].weight;
    low_weight += known[i].weight;
    if (known[i].value == known[i + 1].value) continue;
    const double high_weight = known_weight - low_weight;
    if (low_weight < min_branch || high_weight < min_branch) continue;
    const double info =
        (low_weight * entropy_of(low) + high_weight * entropy_of(high)) / known_weight;
    const double gain = (known_weight / total_weight) * (base - info);
    if (!best || gain > best->gain + kTieTolerance) {
      double mid = known[i].value + (known[i + 1].value - known[i].value) / 2.0;
      if (mid >= known[i + 1].value) mid = known[i].value;
      best = Split{table.attribute(slot), mid, gain, 0.0};
      best_low_weight = low_weight;
    }
  }
  if (!best || best->gain <= kMinGain) return std::nullopt;
  const std::array<double, 2> parts{best_low_weight, known_weight - best_low_weight};
  const double split_info = entropy_of(parts);
  best->gain_ratio = split_info > 0 ? best->gain / split_info : 0.0;
  return best;
}

std::optional<Split> best_split(const FeatureTable& table, std::span<const WeightedRow> rows,
                                const LearnerParams& params) {
  std::vector<Split> candidates;
  for (std::size_t slot = 0; slot < table.slots(); ++slot) {
    if (auto s = numeric_split_gain(table, rows, slot, static_cast<double>(params.min_leaf))) {
      candidates.push_back(*s);
    }
  }
  if (candidates.empty()) return std::nullopt;
  double mean_gain = 0;
  for (const auto& s : candidates) mean_gain += s.gain;
  mean_gain /= static_cast<double>(candidates.size());

  const Split* best = nullptr;
  for (const auto& s : candidates) {
    if (s.gain < mean_gain - kTieTolerance) continue;
    const double score = params.use_gain_ratio ? s.gain_ratio : s.gain;
    const double best_score =
        best == nullptr ? 0.0 : (params.use_gain_ratio ? best->gain_ratio : best->gain);
    if (best == nullptr || score > best_score + kTieTolerance) best = &s;
  }
  return *best;
}

std::optional<Split> numeric_split_gain(const Dataset& dataset, std::size_t attribute,
                                        double min_branch) {
  FeatureTable table(dataset);
  std::size_t slot = table.slot_of(attribute);
  if (slot == table.slots()) return std::nullopt;
  auto rows = all_rows(table);
  return numeric_split_gain(table, rows, slot, min_branch);
}

std::optional<Split> best_split(const Dataset& dataset, const LearnerParams& params) {
  FeatureTable table(dataset);
  auto rows = all_rows(table);
  return best_split(table, rows, params);
}

}  // namespace moviepop

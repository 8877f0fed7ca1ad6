#include "moviepop/learners/ranking.hpp"

#include <algorithm>

#include "moviepop/errors.hpp"
#include "moviepop/learners/split.hpp"

namespace moviepop {

std::vector<AttributeRank> rank_attributes(const Dataset& dataset) {
  if (dataset.empty()) throw ParameterError("cannot rank attributes of an empty dataset");
  FeatureTable table(dataset);
  if (table.slots() == 0) throw ParameterError("dataset has no feature columns");
  const auto rows = all_rows(table);
  const double class_entropy = entropy(distribution_of(table, rows));

  std::vector<AttributeRank> ranks;
  for (std::size_t slot = 0; slot < table.slots(); ++slot) {
    AttributeRank r;
    r.attribute = table.attribute(slot);
    r.name = dataset.schema()[r.attribute].name;
    // A minimum branch weight just above zero admits every midpoint.
    if (auto split = numeric_split_gain(table, rows, slot, 1e-9)) r.gain = split->gain;
    r.percent = class_entropy > 0 ? r.gain / class_entropy * 100.0 : 0.0;
    ranks.push_back(std::move(r));
  }
  std::stable_sort(ranks.begin(), ranks.end(),
                   [](const AttributeRank& a, const AttributeRank& b) { return a.gain > b.gain; });
  return ranks;
}

}  // namespace moviepop

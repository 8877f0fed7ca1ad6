#include "moviepop/learners/feature_table.hpp"

#include "moviepop/errors.hpp"
#include "moviepop/learners/params.hpp"

namespace moviepop {

void LearnerParams::validate() const {
  if (!(prune_fraction > 0.0 && prune_fraction < 1.0)) {
    throw ParameterError("prune_fraction must lie in (0, 1)");
  }
  if (min_leaf < 1) throw ParameterError("min_leaf must be at least 1");
}

FeatureTable::FeatureTable(const Dataset& dataset) : attributes_(dataset.feature_indices()) {
  labels_.reserve(dataset.size());
  values_.reserve(dataset.size() * attributes_.size());
  for (const Instance& inst : dataset.instances()) {
    for (std::size_t a : attributes_) values_.push_back(numeric_cell(inst, a));
    labels_.push_back(inst.label);
  }
}

std::size_t FeatureTable::slot_of(std::size_t attribute) const {
  for (std::size_t s = 0; s < attributes_.size(); ++s) {
    if (attributes_[s] == attribute) return s;
  }
  return attributes_.size();
}

std::vector<WeightedRow> all_rows(const FeatureTable& table) {
  std::vector<WeightedRow> rows(table.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = WeightedRow{i, 1.0};
  return rows;
}

}  // namespace moviepop

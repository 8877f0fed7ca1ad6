#pragma once

// Human-readable model text. Trees print one node per line in preorder,
// indented two spaces per level:
//
//   director_rank <= 6.25 : (3/40/2/0) missing=high gain=0.81 ratio=0.83
//     -> Average (1/30/2/0)
//     -> Excellent (2/10/0/0)
//
// Rule lists print one rule per line followed by the default:
//
//   IF director_rank <= 6.25 AND budget > 1000000 THEN Average (31/0.9)
//   DEFAULT Excellent
//
// Numbers use the shortest form that parses back exactly, so parsing a
// rendering reproduces the model.

#include <string>
#include <string_view>
#include <vector>

#include "moviepop/dataset.hpp"
#include "moviepop/learners/part.hpp"
#include "moviepop/learners/tree.hpp"

namespace moviepop {

std::string render_tree(const DecisionTree& tree, const std::vector<Column>& schema);
DecisionTree parse_tree(std::string_view text, const std::vector<Column>& schema);

std::string render_rules(const RuleList& rules, const std::vector<Column>& schema);
RuleList parse_rules(std::string_view text, const std::vector<Column>& schema);

}  // namespace moviepop

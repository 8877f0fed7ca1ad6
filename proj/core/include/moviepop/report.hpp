#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moviepop/evaluation.hpp"
#include "moviepop/learners/ranking.hpp"

namespace moviepop {

enum class ReportFormat { Plain, Json };

/// Key/value pairs echoed into rendered artifacts (the run configuration).
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Plain text mirrors the usual accuracy-by-class table followed by the
/// confusion matrix grid. JSON uses the keys learner, k, seed, params,
/// labels, matrix, per_class, accuracy, warnings (and config when given).
std::string render_report(const EvalReport& report, ReportFormat format,
                          const ConfigEcho& config = {});

/// Inverse of the JSON rendering. Throws FormatError on schema mismatches.
EvalReport parse_report_json(std::string_view json);

/// Attribute / rank / information gain table.
std::string render_ranking(const std::vector<AttributeRank>& ranks, const ConfigEcho& config = {});

}  // namespace moviepop

#include "moviepop/report.hpp"

#include <nlohmann/json.hpp>
#include <fmt/format.h>

#include "moviepop/errors.hpp"
#include "text.hpp"

namespace moviepop {
namespace {

using json = nlohmann::ordered_json;

json params_json(const LearnerParams& p) {
  return json{{"min_leaf", p.min_leaf},
              {"prune_fraction", p.prune_fraction},
              {"seed", p.seed},
              {"use_gain_ratio", p.use_gain_ratio},
              {"reduced_error_pruning", p.reduced_error_pruning}};
}

std::string plain_report(const EvalReport& r, const ConfigEcho& config) {
  std::string out;
  out += fmt::format("Learner: {}  Folds: {}  Seed: {}\n", to_string(r.learner), r.folds, r.seed);
  out += fmt::format(
      "Params: min_leaf={} prune_fraction={} seed={} use_gain_ratio={} "
      "reduced_error_pruning={}\n",
      r.params.min_leaf, text::format_number(r.params.prune_fraction), r.params.seed,
      r.params.use_gain_ratio, r.params.reduced_error_pruning);
  for (const auto& [k, v] : config) out += fmt::format("Config: {}={}\n", k, v);

  out += "\n=== Detailed Accuracy By Class ===\n";
  out += fmt::format("{:<10} {:>8} {:>8} {:>10} {:>8}\n", "Class", "TP Rate", "FP Rate",
                     "Precision", "Recall");
  for (auto c : kAllClasses) {
    const auto& m = r.per_class[index_of(c)];
    out += fmt::format("{:<10} {:>8.3f} {:>8.3f} {:>10.3f} {:>8.3f}\n", to_string(c), m.tp_rate,
                       m.fp_rate, m.precision, m.recall);
  }

  const auto total = r.matrix.total();
  const auto correct = r.matrix.trace();
  const double pct = total == 0 ? 0.0 : 100.0 * static_cast<double>(correct) / static_cast<double>(total);
  out += fmt::format("\nCorrectly classified:   {} / {} ({:.4f}%)\n", correct, total, pct);
  out += fmt::format("Incorrectly classified: {} / {} ({:.4f}%)\n", total - correct, total,
                     total == 0 ? 0.0 : 100.0 - pct);
  out += fmt::format("Accuracy: {:.4f}\n", r.accuracy);

  out += "\n=== Confusion Matrix ===\n";
  out += fmt::format("{:<10}", "Actual");
  for (auto c : kAllClasses) out += fmt::format(" {:>10}", to_string(c));
  out += fmt::format(" {:>8}\n", "Total");
  for (auto a : kAllClasses) {
    out += fmt::format("{:<10}", to_string(a));
    for (auto p : kAllClasses) out += fmt::format(" {:>10}", r.matrix.at(a, p));
    out += fmt::format(" {:>8}\n", r.matrix.row_sum(a));
  }
  for (const auto& w : r.warnings) out += fmt::format("Warning: {}\n", w);
  return out;
}

json report_json(const EvalReport& r, const ConfigEcho& config) {
  json labels = json::array();
  for (auto c : kAllClasses) labels.push_back(std::string(to_string(c)));
  json matrix = json::array();
  for (const auto& row : r.matrix.cells()) matrix.push_back(row);
  json per_class = json::object();
  for (auto c : kAllClasses) {
    const auto& m = r.per_class[index_of(c)];
    per_class[std::string(to_string(c))] = json{{"tp_rate", m.tp_rate},
                                                {"fp_rate", m.fp_rate},
                                                {"precision", m.precision},
                                                {"recall", m.recall}};
  }
  json j{{"learner", std::string(to_string(r.learner))},
         {"k", r.folds},
         {"seed", r.seed},
         {"params", params_json(r.params)},
         {"labels", labels},
         {"matrix", matrix},
         {"per_class", per_class},
         {"accuracy", r.accuracy},
         {"warnings", r.warnings}};
  if (!config.empty()) {
    json c = json::object();
    for (const auto& [k, v] : config) c[k] = v;
    j["config"] = c;
  }
  return j;
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format, const ConfigEcho& config) {
  if (format == ReportFormat::Plain) return plain_report(report, config);
  return report_json(report, config).dump(2) + "\n";
}

EvalReport parse_report_json(std::string_view text_json) {
  try {
    const json j = json::parse(text_json);
    EvalReport r;
    auto learner = learner_from_string(j.at("learner").get<std::string>());
    if (!learner) throw FormatError("report: unknown learner");
    r.learner = *learner;
    r.folds = j.at("k").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    const auto& p = j.at("params");
    r.params.min_leaf = p.at("min_leaf").get<std::size_t>();
    r.params.prune_fraction = p.at("prune_fraction").get<double>();
    r.params.seed = p.at("seed").get<std::uint64_t>();
    r.params.use_gain_ratio = p.at("use_gain_ratio").get<bool>();
    r.params.reduced_error_pruning = p.at("reduced_error_pruning").get<bool>();

    const auto& labels = j.at("labels");
    if (labels.size() != kClassCount) throw FormatError("report: expected four labels");
    for (std::size_t i = 0; i < kClassCount; ++i) {
      if (labels[i].get<std::string>() != to_string(class_at(i))) {
        throw FormatError("report: labels out of order");
      }
    }
    ConfusionMatrix::Cells cells{};
    const auto& matrix = j.at("matrix");
    if (matrix.size() != kClassCount) throw FormatError("report: matrix must be 4x4");
    for (std::size_t a = 0; a < kClassCount; ++a) {
      if (matrix[a].size() != kClassCount) throw FormatError("report: matrix must be 4x4");
      for (std::size_t b = 0; b < kClassCount; ++b) cells[a][b] = matrix[a][b].get<std::uint64_t>();
    }
    r.matrix = ConfusionMatrix(cells);
    for (auto c : kAllClasses) {
      const auto& m = j.at("per_class").at(std::string(to_string(c)));
      r.per_class[index_of(c)] = ClassMetrics{m.at("tp_rate").get<double>(),
                                              m.at("fp_rate").get<double>(),
                                              m.at("precision").get<double>(),
                                              m.at("recall").get<double>()};
    }
    r.accuracy = j.at("accuracy").get<double>();
    if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw FormatError(fmt::format("report: {}", e.what()));
  }
}

std::string render_ranking(const std::vector<AttributeRank>& ranks, const ConfigEcho& config) {
  std::string out;
  for (const auto& [k, v] : config) out += fmt::format("Config: {}={}\n", k, v);
  if (!config.empty()) out += "\n";
  out += "=== Information Gain Ranking ===\n";
  out += fmt::format("{:<18} {:>4} {:>10} {:>9}\n", "Attribute", "Rank", "Gain(bits)", "Percent");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    out += fmt::format("{:<18} {:>4} {:>10.4f} {:>8.2f}%\n", ranks[i].name, i + 1, ranks[i].gain,
                       ranks[i].percent);
  }
  return out;
}

}  // namespace moviepop

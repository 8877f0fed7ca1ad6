#include "moviepop/correlation.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "moviepop/errors.hpp"

namespace moviepop {
namespace {

double mean(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

struct Moments {
  double sxx = 0;
  double syy = 0;
  double sxy = 0;
  double mx = 0;
  double my = 0;
};

Moments centered_moments(const PairedSeries& s) {
  Moments m;
  m.mx = mean(s.x());
  m.my = mean(s.y());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double dx = s.x()[i] - m.mx;
    const double dy = s.y()[i] - m.my;
    m.sxx += dx * dx;
    m.syy += dy * dy;
    m.sxy += dx * dy;
  }
  return m;
}

}  // namespace

PairedSeries::PairedSeries(std::vector<double> x, std::vector<double> y, std::string x_label,
                           std::string y_label)
    : x_label_(std::move(x_label)), y_label_(std::move(y_label)) {
  if (x.size() != y.size()) throw ParameterError("paired series lengths differ");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) continue;
    x_.push_back(x[i]);
    y_.push_back(y[i]);
  }
  check();
}

PairedSeries::PairedSeries(const std::vector<std::optional<double>>& x,
                           const std::vector<std::optional<double>>& y, std::string x_label,
                           std::string y_label)
    : x_label_(std::move(x_label)), y_label_(std::move(y_label)) {
  if (x.size() != y.size()) throw ParameterError("paired series lengths differ");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i] || !y[i]) continue;
    x_.push_back(*x[i]);
    y_.push_back(*y[i]);
  }
  check();
}

void PairedSeries::check() const {
  if (x_.size() < 2) {
    throw ParameterError(
        fmt::format("{} vs {}: need at least two complete pairs", x_label_, y_label_));
  }
}

double pearson(const PairedSeries& series) {
  const Moments m = centered_moments(series);
  if (m.sxx <= 0 || m.syy <= 0) throw DomainError("correlation undefined for a constant variable");
  const double r = m.sxy / std::sqrt(m.sxx * m.syy);
  return std::clamp(r, -1.0, 1.0);
}

TrendLine trend_line(const PairedSeries& series) {
  const Moments m = centered_moments(series);
  if (m.sxx <= 0) throw DomainError("trend line undefined for constant x");
  TrendLine t;
  t.slope = m.sxy / m.sxx;
  t.intercept = m.my - t.slope * m.mx;
  return t;
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Positive: return "positive";
    case Direction::Negative: return "negative";
    case Direction::None: return "none";
  }
  return "none";
}

PairedSeries series_from_dataset(const Dataset& dataset, std::string_view x_name,
                                 std::string_view y_name) {
  auto xi = dataset.column_index(x_name);
  auto yi = dataset.column_index(y_name);
  if (!xi || !yi) {
    throw ParameterError(fmt::format("dataset lacks column '{}' or '{}'", x_name, y_name));
  }
  std::vector<std::optional<double>> x;
  std::vector<std::optional<double>> y;
  for (const auto& inst : dataset.instances()) {
    x.push_back(number_of(inst.values[*xi]));
    y.push_back(number_of(inst.values[*yi]));
  }
  return PairedSeries(x, y, std::string(x_name), std::string(y_name));
}

CorrelationReport correlate_dataset2(const Dataset& dataset) {
  for (std::string_view name : {"budget", "domestic", "foreign", "worldwide"}) {
    if (!dataset.column_index(name)) {
      throw ParameterError(fmt::format("dataset lacks financial column '{}'", name));
    }
  }
  CorrelationReport report;
  for (std::string_view other : {"domestic", "foreign", "worldwide"}) {
    CorrelationPair pair;
    pair.x_name = "budget";
    pair.y_name = std::string(other);
    try {
      PairedSeries s = series_from_dataset(dataset, "budget", other);
      pair.n = s.size();
      pair.r = pearson(s);
      pair.direction = *pair.r > 0 ? Direction::Positive
                       : *pair.r < 0 ? Direction::Negative
                                     : Direction::None;
    } catch (const Error&) {
      pair.r.reset();
      pair.direction = Direction::None;
    }
    report.pairs.push_back(std::move(pair));
  }
  return report;
}

std::string render_correlation(const CorrelationReport& report, ReportFormat format,
                               const ConfigEcho& config) {
  if (format == ReportFormat::Json) {
    using json = nlohmann::ordered_json;
    json pairs = json::array();
    for (const auto& p : report.pairs) {
      pairs.push_back(json{{"x", p.x_name},
                           {"y", p.y_name},
                           {"r", p.r ? json(*p.r) : json(nullptr)},
                           {"direction", std::string(to_string(p.direction))},
                           {"n", p.n}});
    }
    json j{{"pairs", pairs}};
    if (!config.empty()) {
      json c = json::object();
      for (const auto& [k, v] : config) c[k] = v;
      j["config"] = c;
    }
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& [k, v] : config) out += fmt::format("Config: {}={}\n", k, v);
  if (!config.empty()) out += "\n";
  out += "=== Correlation Coefficient ===\n";
  out += fmt::format("{:<22} {:>12} {:>12} {:>6}\n", "Attribute Names", "Coefficient",
                     "Correlation", "n");
  for (const auto& p : report.pairs) {
    std::string names = fmt::format("{} + {}", p.x_name, p.y_name);
    std::string r = p.r ? fmt::format("{:.4f}", *p.r) : std::string("undefined");
    out += fmt::format("{:<22} {:>12} {:>12} {:>6}\n", names, r, to_string(p.direction), p.n);
  }
  return out;
}

}  // namespace moviepop

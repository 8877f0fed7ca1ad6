#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moviepop/dataset.hpp"
#include "moviepop/report.hpp"

namespace moviepop {

/// Paired observations; pairs with a missing member are dropped on
/// construction. Throws ParameterError when fewer than two pairs remain or
/// the inputs differ in length.
class PairedSeries {
 public:
  PairedSeries(std::vector<double> x, std::vector<double> y, std::string x_label = "x",
               std::string y_label = "y");
  PairedSeries(const std::vector<std::optional<double>>& x,
               const std::vector<std::optional<double>>& y, std::string x_label,
               std::string y_label);

  const std::vector<double>& x() const { return x_; }
  const std::vector<double>& y() const { return y_; }
  const std::string& x_label() const { return x_label_; }
  const std::string& y_label() const { return y_label_; }
  std::size_t size() const { return x_.size(); }

 private:
  void check() const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::string x_label_;
  std::string y_label_;
};

/// Sample Pearson coefficient, computed two-pass around the means. Throws
/// DomainError when either variable is constant.
double pearson(const PairedSeries& series);

/// Least-squares fit of y on x.
struct TrendLine {
  double slope = 0;
  double intercept = 0;

  double at(double x) const { return slope * x + intercept; }
};

/// Throws DomainError when x is constant.
TrendLine trend_line(const PairedSeries& series);

enum class Direction { Positive, Negative, None };

std::string_view to_string(Direction d);

struct CorrelationPair {
  std::string x_name;
  std::string y_name;
  std::optional<double> r;  // empty when undefined
  Direction direction = Direction::None;
  std::size_t n = 0;
};

struct CorrelationReport {
  std::vector<CorrelationPair> pairs;
};

/// Pairs of two named numeric columns, skipping rows where either is missing.
PairedSeries series_from_dataset(const Dataset& dataset, std::string_view x_name,
                                 std::string_view y_name);

/// budget against domestic, foreign and worldwide. A pairing with fewer than
/// two complete rows or a constant side is reported as undefined. Throws
/// ParameterError if one of the four columns is absent.
CorrelationReport correlate_dataset2(const Dataset& dataset);

std::string render_correlation(const CorrelationReport& report, ReportFormat format,
                               const ConfigEcho& config = {});

}  // namespace moviepop

#include "moviepop/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <fmt/format.h>

#include "moviepop/errors.hpp"
#include "text.hpp"

namespace moviepop {
namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 600;
constexpr double kLeft = kWidth * 0.1;
constexpr double kRight = kWidth * 0.9;
constexpr double kTop = kHeight * 0.1;
constexpr double kBottom = kHeight * 0.9;

double nice_number(double range, bool round) {
  const double exponent = std::floor(std::log10(range));
  const double fraction = range / std::pow(10.0, exponent);
  double nice = 10;
  if (round) {
    if (fraction < 1.5) nice = 1;
    else if (fraction < 3) nice = 2;
    else if (fraction < 7) nice = 5;
  } else {
    if (fraction <= 1) nice = 1;
    else if (fraction <= 2) nice = 2;
    else if (fraction <= 5) nice = 5;
  }
  return nice * std::pow(10.0, exponent);
}

std::string compact(double v) {
  const double a = std::abs(v);
  auto trimmed = [](double x, std::string_view suffix) {
    std::string s = fmt::format("{:.2f}", x);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s + std::string(suffix);
  };
  if (a >= 1e9) return trimmed(v / 1e9, "B");
  if (a >= 1e6) return trimmed(v / 1e6, "M");
  if (a >= 1e3) return trimmed(v / 1e3, "K");
  return trimmed(v, "");
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write {}", path.string()));
  out << content;
  if (!out) throw IoError(fmt::format("write failed for {}", path.string()));
}

}  // namespace

AxisTicks nice_ticks(double lo, double hi, int target) {
  if (!(hi > lo)) {
    const double pad = lo == 0 ? 1.0 : std::abs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  const double range = nice_number(hi - lo, false);
  const double step = nice_number(range / std::max(1, target), true);
  AxisTicks t;
  t.step = step;
  t.start = std::floor(lo / step) * step;
  const double end = std::ceil(hi / step) * step;
  const auto count = static_cast<long long>(std::llround((end - t.start) / step));
  for (long long i = 0; i <= count; ++i) t.values.push_back(t.start + static_cast<double>(i) * step);
  return t;
}

std::string render_scatter_svg(const PairedSeries& series, const TrendLine& trend) {
  const auto [xmin_it, xmax_it] = std::minmax_element(series.x().begin(), series.x().end());
  const double xmin = *xmin_it;
  const double xmax = *xmax_it;
  double ymin = std::min(trend.at(xmin), trend.at(xmax));
  double ymax = std::max(trend.at(xmin), trend.at(xmax));
  for (double y : series.y()) {
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  const AxisTicks xt = nice_ticks(xmin, xmax);
  const AxisTicks yt = nice_ticks(ymin, ymax);
  const double x0 = xt.values.front();
  const double x1 = xt.values.back();
  const double y0 = yt.values.front();
  const double y1 = yt.values.back();
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * (kRight - kLeft); };
  auto py = [&](double y) { return kBottom - (y - y0) / (y1 - y0) * (kBottom - kTop); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      kWidth, kHeight);
  out += fmt::format("<title>Scatter plot of {} and {}</title>\n", escape(series.x_label()),
                     escape(series.y_label()));
  out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";

  out += fmt::format("<path d=\"M{:.2f},{:.2f} H{:.2f} M{:.2f},{:.2f} V{:.2f}\" stroke=\"black\" "
                     "fill=\"none\"/>\n",
                     kLeft, kBottom, kRight, kLeft, kBottom, kTop);
  std::string ticks;
  for (double v : xt.values) ticks += fmt::format("M{:.2f},{:.2f} v6 ", px(v), kBottom);
  for (double v : yt.values) ticks += fmt::format("M{:.2f},{:.2f} h-6 ", kLeft, py(v));
  ticks.pop_back();
  out += fmt::format("<path d=\"{}\" stroke=\"black\" fill=\"none\"/>\n", ticks);

  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (double v : xt.values) {
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", px(v),
                       kBottom + 20, compact(v));
  }
  for (double v : yt.values) {
    out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n",
                       kLeft - 10, py(v) + 4, compact(v));
  }
  out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n",
                     (kLeft + kRight) / 2, kHeight - 15, escape(series.x_label()));
  out += fmt::format(
      "<text x=\"20\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2f})\">{}"
      "</text>\n",
      (kTop + kBottom) / 2, (kTop + kBottom) / 2, escape(series.y_label()));
  out += "</g>\n";

  out += "<g fill=\"steelblue\" fill-opacity=\"0.7\">\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\"/>\n", px(series.x()[i]),
                       py(series.y()[i]));
  }
  out += "</g>\n";
  out += fmt::format(
      "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"firebrick\" "
      "stroke-width=\"2\"/>\n",
      px(xmin), py(trend.at(xmin)), px(xmax), py(trend.at(xmax)));
  out += "</svg>\n";
  return out;
}

std::string render_points_csv(const PairedSeries& series) {
  std::string out = fmt::format("{},{}\n", series.x_label(), series.y_label());
  for (std::size_t i = 0; i < series.size(); ++i) {
    out += fmt::format("{},{}\n", text::format_number(series.x()[i]),
                       text::format_number(series.y()[i]));
  }
  return out;
}

void scatter_plot(const PairedSeries& series, const TrendLine& trend,
                  const std::filesystem::path& svg_path) {
  write_file(svg_path, render_scatter_svg(series, trend));
  std::filesystem::path csv_path = svg_path;
  csv_path.replace_extension(".csv");
  write_file(csv_path, render_points_csv(series));
}

}  // namespace moviepop

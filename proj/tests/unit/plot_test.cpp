#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "fixtures.hpp"
#include "moviepop/plot.hpp"

namespace moviepop {
namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(NiceTicks, RoundStepsCoverRange) {
  AxisTicks t = nice_ticks(0, 100);
  EXPECT_DOUBLE_EQ(t.step, 20);
  EXPECT_DOUBLE_EQ(t.values.front(), 0);
  EXPECT_DOUBLE_EQ(t.values.back(), 100);
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    double lo = (rng.uniform() - 0.5) * 1e9, hi = lo + rng.uniform() * 1e8 + 1;
    AxisTicks a = nice_ticks(lo, hi);
    EXPECT_LE(a.values.front(), lo);
    EXPECT_GE(a.values.back(), hi);
    const double mant = a.step / std::pow(10.0, std::floor(std::log10(a.step)));
    EXPECT_TRUE(std::abs(mant - 1) < 1e-9 || std::abs(mant - 2) < 1e-9 || std::abs(mant - 5) < 1e-9)
        << a.step;
  }
}

TEST(ScatterSvg, ElementCounts) {
  PairedSeries s(std::vector<double>{1e6, 2e6, 3e6}, std::vector<double>{2e6, 3e6, 7e6}, "budget", "domestic");
  std::string svg = render_scatter_svg(s, trend_line(s));
  EXPECT_EQ(count(svg, "<circle"), 3u);
  EXPECT_EQ(count(svg, "<line"), 1u);
  EXPECT_NE(svg.find("width=\"800\""), std::string::npos);
  EXPECT_NE(svg.find("height=\"600\""), std::string::npos);
  EXPECT_NE(svg.find(">budget<"), std::string::npos);
  EXPECT_NE(svg.find(">domestic<"), std::string::npos);
}

TEST(ScatterSvg, PositiveSlopeRisesToTheRight) {
  PairedSeries s({1, 2, 3, 4}, {1, 3, 2, 5});
  std::string svg = render_scatter_svg(s, trend_line(s));
  std::smatch m;
  ASSERT_TRUE(std::regex_search(
      svg, m, std::regex(R"re(<line x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re")));
  // SVG y grows downward, so a rising line has a smaller y2.
  EXPECT_LT(std::stod(m[1]), std::stod(m[3]));
  EXPECT_GT(std::stod(m[2]), std::stod(m[4]));
}

TEST(ScatterPlot, WritesSvgAndCsv) {
  testing::TempDir dir("plot");
  PairedSeries s(std::vector<double>{1, 2, 3, 4, 5}, std::vector<double>{2, 4, 5, 4, 5}, "budget", "foreign");
  scatter_plot(s, trend_line(s), dir.path() / "budget_foreign.svg");
  std::string svg = slurp(dir.path() / "budget_foreign.svg");
  std::string csv = slurp(dir.path() / "budget_foreign.csv");
  EXPECT_EQ(count(svg, "<circle"), 5u);
  EXPECT_EQ(count(csv, "\n"), 6u);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "budget,foreign");
  scatter_plot(s, trend_line(s), dir.path() / "again.svg");
  EXPECT_EQ(slurp(dir.path() / "again.svg"), svg);
}

}  // namespace
}  // namespace moviepop

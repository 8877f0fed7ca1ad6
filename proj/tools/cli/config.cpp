#include "cli/config.hpp"

#include <charconv>
#include <fstream>

#include <fmt/format.h>

#include "moviepop/errors.hpp"

namespace moviepop::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_integer(std::string_view key, std::string_view value) {
  T v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParameterError(fmt::format("config '{}': expected an integer, got '{}'", key, value));
  }
  return v;
}

double parse_real(std::string_view key, std::string_view value) {
  double v{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParameterError(fmt::format("config '{}': expected a number, got '{}'", key, value));
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw ParameterError(fmt::format("config '{}': expected true or false, got '{}'", key, value));
}

std::filesystem::path resolve(std::string_view value, const std::filesystem::path& base) {
  std::filesystem::path p{std::string(value)};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p.lexically_normal();
}

}  // namespace

void apply_setting(RunConfig& c, std::string_view key, std::string_view value,
                   const std::filesystem::path& base) {
  value = trim(value);
  auto path_slot = [&]() -> std::filesystem::path* {
    if (key == "movies") return &c.movies;
    if (key == "ratings") return &c.ratings;
    if (key == "directors") return &c.directors;
    if (key == "actors") return &c.actors;
    if (key == "actresses") return &c.actresses;
    if (key == "countries") return &c.countries;
    if (key == "languages") return &c.languages;
    if (key == "business") return &c.business;
    if (key == "boxoffice") return &c.boxoffice;
    if (key == "store") return &c.store;
    if (key == "data") return &c.data;
    if (key == "out") return &c.out;
    return nullptr;
  }();
  if (path_slot != nullptr) {
    *path_slot = resolve(value, base);
    return;
  }
  if (key == "year_after") {
    c.build.filter.year_after = parse_integer<int>(key, value);
  } else if (key == "year_before") {
    c.build.filter.year_before = parse_integer<int>(key, value);
  } else if (key == "country") {
    c.build.filter.country = std::string(value);
  } else if (key == "language") {
    c.build.filter.language = std::string(value);
  } else if (key == "min_votes") {
    c.build.filter.min_votes = parse_integer<std::uint64_t>(key, value);
  } else if (key == "rank_universe") {
    if (value == "all") {
      c.build.rank_universe = RankUniverse::AllRated;
    } else if (value == "candidates") {
      c.build.rank_universe = RankUniverse::Candidates;
    } else {
      throw ParameterError("config 'rank_universe': expected 'all' or 'candidates'");
    }
  } else if (key == "per_step_cap") {
    c.build.per_step_cap = parse_integer<std::size_t>(key, value);
  } else if (key == "min_leaf") {
    c.params.min_leaf = parse_integer<std::size_t>(key, value);
  } else if (key == "prune_fraction") {
    c.params.prune_fraction = parse_real(key, value);
  } else if (key == "use_gain_ratio") {
    c.params.use_gain_ratio = parse_bool(key, value);
  } else if (key == "reduced_error_pruning") {
    c.params.reduced_error_pruning = parse_bool(key, value);
  } else if (key == "folds") {
    c.folds = parse_integer<std::size_t>(key, value);
  } else if (key == "seed") {
    c.seed = parse_integer<std::uint64_t>(key, value);
    c.params.seed = c.seed;
  } else {
    throw ParameterError(fmt::format("unknown config key '{}'", key));
  }
}

void load_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError(fmt::format("cannot read config file {}", path.string()));
  const std::filesystem::path base = path.parent_path();
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';' || line.front() == '[') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError(fmt::format("{}:{}: expected key = value", path.string(), line_no));
    }
    apply_setting(config, trim(line.substr(0, eq)), line.substr(eq + 1), base);
  }
}

ConfigEcho RunConfig::echo() const {
  const char* universe = build.rank_universe == RankUniverse::AllRated ? "all" : "candidates";
  return {
      {"year_after", std::to_string(build.filter.year_after)},
      {"year_before", std::to_string(build.filter.year_before)},
      {"country", build.filter.country},
      {"language", build.filter.language},
      {"min_votes", std::to_string(build.filter.min_votes)},
      {"rank_universe", universe},
      {"per_step_cap", std::to_string(build.per_step_cap)},
      {"min_leaf", std::to_string(params.min_leaf)},
      {"prune_fraction", fmt::format("{}", params.prune_fraction)},
      {"use_gain_ratio", params.use_gain_ratio ? "true" : "false"},
      {"reduced_error_pruning", params.reduced_error_pruning ? "true" : "false"},
      {"folds", std::to_string(folds)},
      {"seed", std::to_string(seed)},
  };
}

}  // namespace moviepop::cli

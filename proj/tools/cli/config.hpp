#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "moviepop/builder.hpp"
#include "moviepop/learners/params.hpp"
#include "moviepop/report.hpp"

namespace moviepop::cli {

/// Effective settings for one run. Defaults follow the study: movies from
/// 2001-2010, USA, English, at least 1000 votes, 10 folds, min_leaf 2,
/// a third of each training set held out for pruning, seed 1.
struct RunConfig {
  std::filesystem::path movies;
  std::filesystem::path ratings;
  std::filesystem::path directors;
  std::filesystem::path actors;
  std::filesystem::path actresses;
  std::filesystem::path countries;
  std::filesystem::path languages;
  std::filesystem::path business;
  std::filesystem::path boxoffice;

  std::filesystem::path store;
  std::filesystem::path data;
  std::filesystem::path out = "out";

  BuildOptions build;
  LearnerParams params;
  std::size_t folds = 10;
  std::uint64_t seed = 1;

  ConfigEcho echo() const;
};

/// Sets one key. Relative paths are resolved against `base`. Throws
/// ParameterError for unknown keys or unparsable values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value,
                   const std::filesystem::path& base = {});

/// Reads a flat `key = value` file; `#` and `;` start comments and
/// `[section]` headers are ignored.
void load_config_file(RunConfig& config, const std::filesystem::path& path);

}  // namespace moviepop::cli

#pragma once

// Turns a MovieStore into the two study datasets: the pre-release set
// (director and cast ranks, budget) and the post-release set (box-office
// figures).

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "moviepop/dataset.hpp"
#include "moviepop/store.hpp"

namespace moviepop {

struct FilterConfig {
  int year_after = 2000;   // exclusive
  int year_before = 2011;  // exclusive
  std::string country = "USA";
  std::string language = "English";
  std::uint64_t min_votes = 1000;
};

/// Which movies feed a person's mean rating.
enum class RankUniverse { AllRated, Candidates };

struct BuildOptions {
  FilterConfig filter;
  RankUniverse rank_universe = RankUniverse::AllRated;
  std::size_t per_step_cap = 10;  // Average instances kept per 0.1 rating step
};

struct PersonRank {
  std::string person;
  CreditRole role = CreditRole::Director;
  double rank = 0;
  std::size_t support = 0;
};

using PersonRanks = std::map<std::string, PersonRank>;

struct RankTables {
  PersonRanks directors;
  PersonRanks actors;
  PersonRanks actresses;
};

struct MovieFeatures {
  std::optional<double> director_rank;
  double male_cast_rank = 0;
  double female_cast_rank = 0;
  std::optional<Money> budget;
};

/// Movies (not TV, video, ...) with year in the open interval, the
/// configured country and language, and at least min_votes votes.
std::set<TitleKey> filter_candidates(const MovieStore& store, const FilterConfig& filter = {});

/// Mean rating of each person's rated movies in `role`. When `universe` is
/// given only those titles count. Unrated persons are absent.
PersonRanks person_ranks(const MovieStore& store, CreditRole role,
                         const std::set<TitleKey>* universe = nullptr);

RankTables rank_tables(const MovieStore& store, const std::set<TitleKey>* universe = nullptr);

/// Director rank is the mean over the movie's ranked directors (missing when
/// none); cast ranks are sums (0 for an empty cast); budget is the first USD
/// budget line that yields an amount.
MovieFeatures derive_features(const TitleKey& key, const MovieStore& store,
                              const RankTables& ranks);

/// Keeps, for each rating step 5.0..7.4, the `cap` Average instances with the
/// most votes (ties by title). Other classes pass through; order is kept.
/// Requires `title`, `votes` and `rating` columns.
Dataset balance_average(const Dataset& dataset, std::size_t cap = 10);

/// Columns: id, title, year, language, country, budget, director_rank,
/// male_cast_rank, female_cast_rank, votes, rating (+ class).
Dataset build_dataset1(const MovieStore& store, const BuildOptions& options = {});

/// Columns: id, title, budget, domestic, foreign, worldwide, votes, rating
/// (+ class). Only movies with all four USD amounts qualify. No balancing.
Dataset build_dataset2(const MovieStore& store, const BuildOptions& options = {});

}  // namespace moviepop

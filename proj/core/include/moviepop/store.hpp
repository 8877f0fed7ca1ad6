#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "moviepop/ingest.hpp"
#include "moviepop/title_key.hpp"

namespace moviepop {

/// Raw parser output handed to build_store.
struct ParsedTables {
  std::vector<MovieRecord> movies;
  std::vector<RatingRecord> ratings;
  std::vector<CreditRecord> credits;
  std::vector<AttributeRecord> attributes;  // file order is significant
  std::vector<FinanceRecord> finances;
};

struct StoreCounts {
  std::size_t duplicate_movies = 0;
  std::size_t duplicate_ratings = 0;
  std::size_t duplicate_credits = 0;
  std::size_t duplicate_finances = 0;
  std::size_t dangling_ratings = 0;
  std::size_t dangling_credits = 0;
  std::size_t dangling_attributes = 0;
  std::size_t dangling_finances = 0;

  std::size_t dangling() const {
    return dangling_ratings + dangling_credits + dangling_attributes + dangling_finances;
  }
  bool operator==(const StoreCounts&) const = default;
};

/// Immutable relational snapshot of the list files. Every record's key
/// resolves to a movie; lookups are exact on the rendered key.
class MovieStore {
 public:
  MovieStore() = default;

  const std::map<TitleKey, MovieRecord>& movies() const { return movies_; }
  const std::map<TitleKey, RatingRecord>& ratings() const { return ratings_; }
  /// Sorted by (person, role, key); unique.
  const std::vector<CreditRecord>& credits() const { return credits_; }
  /// In source order.
  const std::vector<AttributeRecord>& attributes() const { return attributes_; }
  const std::map<TitleKey, FinanceRecord>& finances() const { return finances_; }
  const StoreCounts& counts() const { return counts_; }

  const MovieRecord* find_movie(const TitleKey& key) const;
  const RatingRecord* find_rating(const TitleKey& key) const;
  const FinanceRecord* find_finance(const TitleKey& key) const;

  /// Credits on one title for one role, ordered by person.
  std::vector<const CreditRecord*> credits_for(const TitleKey& key, CreditRole role) const;
  /// Attribute values of one kind for a title, in source order.
  std::vector<std::string_view> attribute_values(const TitleKey& key, AttributeKind kind) const;

  /// 1-based position of the key in rendered-key order; 0 when absent.
  std::size_t movie_id(const TitleKey& key) const;

  /// Compares content; drop counters are bookkeeping and not compared.
  bool operator==(const MovieStore& other) const;

 private:
  friend MovieStore build_store(ParsedTables tables);

  std::map<TitleKey, MovieRecord> movies_;
  std::map<TitleKey, RatingRecord> ratings_;
  std::vector<CreditRecord> credits_;
  std::vector<AttributeRecord> attributes_;
  std::map<TitleKey, FinanceRecord> finances_;
  StoreCounts counts_;

  std::map<TitleKey, std::vector<std::size_t>> credits_by_key_;
  std::map<TitleKey, std::vector<std::size_t>> attributes_by_key_;
  std::map<TitleKey, std::size_t> ids_;
};

/// Links the parsed tables. Records whose key has no movie are dropped and
/// counted; duplicate movies, ratings and finances keep the first
/// occurrence; duplicate credits collapse to one.
MovieStore build_store(ParsedTables tables);

/// Writes movies.tsv, ratings.tsv, credits.tsv, attributes.tsv and
/// finances.tsv under `dir`.
void save_store(const MovieStore& store, const std::filesystem::path& dir);
MovieStore load_store(const std::filesystem::path& dir);

}  // namespace moviepop

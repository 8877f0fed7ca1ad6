#pragma once

// Parsers for IMDB-style plain-text list files and the box-office CSV feed.
//
// Every line-oriented parser returns a ParseResult whose counters satisfy
// records.size() + skipped == candidate_lines (for the credits parser a
// candidate line is a line that names a title). A parser throws FormatError
// when more than half of its candidate lines are malformed, which almost
// always means the wrong file was supplied.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moviepop/title_key.hpp"

namespace moviepop {

enum class MovieKind { Movie, TvSeries, TvMovie, Video, VideoGame, MiniSeries };

std::string_view to_string(MovieKind kind);
std::optional<MovieKind> movie_kind_from_string(std::string_view s);

struct MovieRecord {
  TitleKey key;
  MovieKind kind = MovieKind::Movie;
  bool operator==(const MovieRecord&) const = default;
};

/// User rating stored in tenths so that the published one-decimal value is
/// exact (7.5 is held as 75).
class Rating {
 public:
  static constexpr int kMinTenths = 10;
  static constexpr int kMaxTenths = 100;

  static std::optional<Rating> from_tenths(int tenths);
  /// Accepts `D.D` or `DD.D` only.
  static std::optional<Rating> parse(std::string_view text);

  int tenths() const { return tenths_; }
  double value() const { return tenths_ / 10.0; }
  std::string str() const;

  auto operator<=>(const Rating&) const = default;

 private:
  explicit Rating(int tenths) : tenths_(tenths) {}
  int tenths_ = kMinTenths;
};

struct RatingRecord {
  TitleKey key;
  std::uint64_t votes = 0;
  Rating rating = *Rating::from_tenths(Rating::kMinTenths);
  bool operator==(const RatingRecord&) const = default;
};

enum class CreditRole { Director, Actor, Actress };

std::string_view to_string(CreditRole role);
std::optional<CreditRole> credit_role_from_string(std::string_view s);

struct CreditRecord {
  std::string person;
  CreditRole role = CreditRole::Director;
  TitleKey key;
  bool operator==(const CreditRecord&) const = default;
};

enum class AttributeKind { Country, Language, BudgetLine };

std::string_view to_string(AttributeKind kind);
std::optional<AttributeKind> attribute_kind_from_string(std::string_view s);

struct AttributeRecord {
  TitleKey key;
  AttributeKind kind = AttributeKind::Country;
  std::string value;
  bool operator==(const AttributeRecord&) const = default;
};

/// Whole currency units with an uppercase ISO-style code.
struct Money {
  std::uint64_t amount = 0;
  std::string currency = "USD";

  /// `USD 10,000,000`
  std::string str() const;
  bool operator==(const Money&) const = default;
};

struct FinanceRecord {
  TitleKey key;
  std::optional<Money> budget;
  std::optional<Money> domestic;
  std::optional<Money> foreign;
  std::optional<Money> worldwide;
  bool operator==(const FinanceRecord&) const = default;
};

template <typename Record>
struct ParseResult {
  std::vector<Record> records;
  std::size_t candidate_lines = 0;
  std::size_t skipped = 0;
  /// First few rejected lines with their 1-based line numbers.
  std::vector<std::string> diagnostics;
};

ParseResult<MovieRecord> parse_movies(std::istream& in);
ParseResult<RatingRecord> parse_ratings(std::istream& in);
ParseResult<CreditRecord> parse_credits(std::istream& in, CreditRole role);
ParseResult<AttributeRecord> parse_attributes(std::istream& in, AttributeKind kind);
ParseResult<FinanceRecord> parse_boxoffice_csv(std::istream& in);

/// Pulls `<CUR> <amount>` out of a free-text budget value. Thousands
/// separators are dropped and trailing annotations ignored. Throws
/// FormatError when no currency code followed by an amount is present.
Money extract_amount(std::string_view raw);

/// Kind implied by a movies-list entry: quoted titles are TV series, a
/// `(mini)` marker makes a mini-series, `(TV)`, `(V)` and `(VG)` mark TV
/// movies, videos and video games. Unknown suffixes yield nullopt.
std::optional<MovieKind> classify_kind(const TitleKey& key, std::string_view suffix);

}  // namespace moviepop

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace moviepop {

/// Identifies a production the way list files do: `Title (YYYY)` or
/// `Title (YYYY/II)`. An unknown year is written `????`.
struct TitleKey {
  static constexpr int kMinYear = 1870;
  static constexpr int kMaxYear = 2100;

  std::string title;
  std::optional<int> year;
  std::string disambiguator;  // roman numeral, empty when absent

  std::string str() const;

  /// True when the title is wrapped in double quotes (TV series convention).
  bool quoted() const;

  bool operator==(const TitleKey&) const = default;
};

/// Keys order by their rendered form.
std::strong_ordering operator<=>(const TitleKey& a, const TitleKey& b);

/// Parses text that consists of exactly one key (surrounding blanks ignored).
std::optional<TitleKey> parse_title_key(std::string_view text);

struct KeyPrefix {
  TitleKey key;
  std::string_view rest;  // text following the key's year group, untrimmed
};

/// Finds the key at the start of `line`: the title runs up to the last year
/// group that is followed by whitespace or end of line.
std::optional<KeyPrefix> split_key_prefix(std::string_view line);

}  // namespace moviepop

#include "moviepop/title_key.hpp"

#include <cctype>

#include "text.hpp"

namespace moviepop {
namespace {

bool is_roman(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c != 'I' && c != 'V' && c != 'X' && c != 'L' && c != 'C' && c != 'D' && c != 'M') {
      return false;
    }
  }
  return true;
}

struct YearGroup {
  std::optional<int> year;
  std::string disambiguator;
};

// `group` excludes the parentheses.
std::optional<YearGroup> parse_year_group(std::string_view group) {
  std::string_view year_text = group;
  std::string_view roman;
  if (auto slash = group.find('/'); slash != std::string_view::npos) {
    year_text = group.substr(0, slash);
    roman = group.substr(slash + 1);
    if (!is_roman(roman)) return std::nullopt;
  }
  if (year_text.size() != 4) return std::nullopt;
  YearGroup out;
  out.disambiguator = std::string(roman);
  if (year_text == "????") return out;
  int year = 0;
  for (char c : year_text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    year = year * 10 + (c - '0');
  }
  if (year < TitleKey::kMinYear || year > TitleKey::kMaxYear) return std::nullopt;
  out.year = year;
  return out;
}

}  // namespace

std::string TitleKey::str() const {
  std::string out = title;
  out += " (";
  out += year ? std::to_string(*year) : std::string("????");
  if (!disambiguator.empty()) {
    out += '/';
    out += disambiguator;
  }
  out += ')';
  return out;
}

bool TitleKey::quoted() const {
  return title.size() >= 2 && title.front() == '"' && title.back() == '"';
}

std::strong_ordering operator<=>(const TitleKey& a, const TitleKey& b) {
  return a.str() <=> b.str();
}

std::optional<KeyPrefix> split_key_prefix(std::string_view line) {
  line = text::trim_left(line);
  // Scan right to left so the last qualifying group wins.
  for (std::size_t close = line.rfind(')'); close != std::string_view::npos && close > 0;
       close = line.rfind(')', close - 1)) {
    if (close + 1 < line.size() && !std::isspace(static_cast<unsigned char>(line[close + 1]))) {
      continue;
    }
    std::size_t open = line.rfind('(', close);
    if (open == std::string_view::npos || open == 0) continue;
    if (line[open - 1] != ' ') continue;
    auto group = parse_year_group(line.substr(open + 1, close - open - 1));
    if (!group) continue;
    std::string_view title = line.substr(0, open - 1);
    if (title.empty() || title != text::trim(title)) continue;
    KeyPrefix out;
    out.key.title = std::string(title);
    out.key.year = group->year;
    out.key.disambiguator = std::move(group->disambiguator);
    out.rest = line.substr(close + 1);
    return out;
  }
  return std::nullopt;
}

std::optional<TitleKey> parse_title_key(std::string_view text) {
  auto prefix = split_key_prefix(text::trim(text));
  if (!prefix || !prefix->rest.empty()) return std::nullopt;
  return std::move(prefix->key);
}

}  // namespace moviepop

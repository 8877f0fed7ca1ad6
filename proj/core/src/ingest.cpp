#include "moviepop/ingest.hpp"

#include <array>
#include <istream>
#include <regex>
#include <sstream>

#include <fmt/format.h>

#include "moviepop/errors.hpp"
#include "text.hpp"

namespace moviepop {
namespace {

constexpr std::size_t kMaxDiagnostics = 8;

template <typename Record>
void reject(ParseResult<Record>& result, std::size_t line_no, std::string_view line,
            std::string_view why) {
  ++result.skipped;
  if (result.diagnostics.size() < kMaxDiagnostics) {
    result.diagnostics.push_back(fmt::format("line {}: {}: '{}'", line_no, why, line));
  }
}

void require_readable(std::istream& in, std::string_view what) {
  if (!in) throw IngestError(fmt::format("cannot read {} input", what));
}

template <typename Record>
void finish(ParseResult<Record>& result, std::istream& in, std::string_view what) {
  if (in.bad()) throw IngestError(fmt::format("read failure in {} input", what));
  if (result.candidate_lines > 0 && result.skipped * 2 > result.candidate_lines) {
    throw FormatError(fmt::format("{} input: {} of {} lines malformed; wrong file?", what,
                                  result.skipped, result.candidate_lines));
  }
}

bool is_comment(std::string_view line) { return !line.empty() && line.front() == '#'; }

// Splits a ratings line into its first two whitespace-delimited tokens and
// the remainder.
bool next_token(std::string_view& s, std::string_view& token) {
  s = text::trim_left(s);
  if (s.empty()) return false;
  std::size_t end = 0;
  while (end < s.size() && !text::is_blank(s[end])) ++end;
  token = s.substr(0, end);
  s.remove_prefix(end);
  return true;
}

std::string with_separators(std::uint64_t amount) {
  std::string digits = std::to_string(amount);
  std::string out;
  int count = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (count > 0 && count % 3 == 0) out.push_back(',');
    out.push_back(*it);
    ++count;
  }
  return {out.rbegin(), out.rend()};
}

}  // namespace

std::string_view to_string(MovieKind kind) {
  switch (kind) {
    case MovieKind::Movie: return "movie";
    case MovieKind::TvSeries: return "tv-series";
    case MovieKind::TvMovie: return "tv-movie";
    case MovieKind::Video: return "video";
    case MovieKind::VideoGame: return "video-game";
    case MovieKind::MiniSeries: return "mini-series";
  }
  return "movie";
}

std::optional<MovieKind> movie_kind_from_string(std::string_view s) {
  for (auto k : {MovieKind::Movie, MovieKind::TvSeries, MovieKind::TvMovie, MovieKind::Video,
                 MovieKind::VideoGame, MovieKind::MiniSeries}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::string_view to_string(CreditRole role) {
  switch (role) {
    case CreditRole::Director: return "director";
    case CreditRole::Actor: return "actor";
    case CreditRole::Actress: return "actress";
  }
  return "director";
}

std::optional<CreditRole> credit_role_from_string(std::string_view s) {
  for (auto r : {CreditRole::Director, CreditRole::Actor, CreditRole::Actress}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

std::string_view to_string(AttributeKind kind) {
  switch (kind) {
    case AttributeKind::Country: return "country";
    case AttributeKind::Language: return "language";
    case AttributeKind::BudgetLine: return "budget-line";
  }
  return "country";
}

std::optional<AttributeKind> attribute_kind_from_string(std::string_view s) {
  for (auto k : {AttributeKind::Country, AttributeKind::Language, AttributeKind::BudgetLine}) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

std::optional<Rating> Rating::from_tenths(int tenths) {
  if (tenths < kMinTenths || tenths > kMaxTenths) return std::nullopt;
  return Rating(tenths);
}

std::optional<Rating> Rating::parse(std::string_view s) {
  auto dot = s.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot > 2 || dot + 2 != s.size()) {
    return std::nullopt;
  }
  int tenths = 0;
  for (char c : s) {
    if (c == '.') continue;
    if (c < '0' || c > '9') return std::nullopt;
    tenths = tenths * 10 + (c - '0');
  }
  return from_tenths(tenths);
}

std::string Rating::str() const { return fmt::format("{}.{}", tenths_ / 10, tenths_ % 10); }

std::string Money::str() const { return currency + " " + with_separators(amount); }

std::optional<MovieKind> classify_kind(const TitleKey& key, std::string_view suffix) {
  suffix = text::trim(suffix);
  if (suffix == "(mini)" || suffix == "{(mini)}") return MovieKind::MiniSeries;
  if (key.quoted()) {
    if (suffix.empty()) return MovieKind::TvSeries;
    return std::nullopt;
  }
  if (suffix.empty()) return MovieKind::Movie;
  if (suffix == "(TV)") return MovieKind::TvMovie;
  if (suffix == "(V)") return MovieKind::Video;
  if (suffix == "(VG)") return MovieKind::VideoGame;
  return std::nullopt;
}

ParseResult<MovieRecord> parse_movies(std::istream& in) {
  require_readable(in, "movies");
  ParseResult<MovieRecord> result;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.empty() || is_comment(line)) continue;
    ++result.candidate_lines;
    auto prefix = split_key_prefix(line);
    if (!prefix) {
      reject(result, line_no, line, "no title key");
      continue;
    }
    auto kind = classify_kind(prefix->key, prefix->rest);
    if (!kind) {
      reject(result, line_no, line, "unknown kind suffix");
      continue;
    }
    result.records.push_back(MovieRecord{std::move(prefix->key), *kind});
  }
  finish(result, in, "movies");
  return result;
}

ParseResult<RatingRecord> parse_ratings(std::istream& in) {
  require_readable(in, "ratings");
  ParseResult<RatingRecord> result;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.empty() || is_comment(line)) continue;
    ++result.candidate_lines;
    std::string_view rest = line;
    std::string_view votes_text;
    std::string_view rating_text;
    if (!next_token(rest, votes_text) || !next_token(rest, rating_text)) {
      reject(result, line_no, line, "expected votes, rating and title");
      continue;
    }
    auto votes = text::parse_u64(votes_text);
    if (!votes) {
      reject(result, line_no, line, "non-numeric votes");
      continue;
    }
    auto rating = Rating::parse(rating_text);
    if (!rating) {
      reject(result, line_no, line, "rating not a one-decimal value in [1.0, 10.0]");
      continue;
    }
    auto key = parse_title_key(rest);
    if (!key) {
      reject(result, line_no, line, "no title key");
      continue;
    }
    result.records.push_back(RatingRecord{std::move(*key), *votes, *rating});
  }
  finish(result, in, "ratings");
  return result;
}

ParseResult<CreditRecord> parse_credits(std::istream& in, CreditRole role) {
  require_readable(in, "credits");
  ParseResult<CreditRecord> result;
  std::optional<std::string> person;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::strip_cr(raw);
    if (text::trim(line).empty()) {
      person.reset();
      continue;
    }
    if (is_comment(line)) continue;

    if (line.front() == '\t' || line.front() == ' ') {
      if (!person) {
        throw FormatError(
            fmt::format("credits line {}: continuation line outside a person block", line_no));
      }
      ++result.candidate_lines;
      auto prefix = split_key_prefix(text::trim(line));
      if (!prefix) {
        reject(result, line_no, line, "no title key");
        continue;
      }
      result.records.push_back(CreditRecord{*person, role, std::move(prefix->key)});
      continue;
    }

    ++result.candidate_lines;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      reject(result, line_no, line, "person line without TAB separator");
      continue;
    }
    std::string_view name = text::trim(line.substr(0, tab));
    auto prefix = split_key_prefix(text::trim(line.substr(tab + 1)));
    if (name.empty() || !prefix) {
      reject(result, line_no, line, "person line without name or title key");
      continue;
    }
    person = std::string(name);
    result.records.push_back(CreditRecord{*person, role, std::move(prefix->key)});
  }
  finish(result, in, "credits");
  return result;
}

namespace {

void parse_tabbed_attributes(std::istream& in, AttributeKind kind,
                             ParseResult<AttributeRecord>& result) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::strip_cr(raw);
    if (text::trim(line).empty() || is_comment(line)) continue;
    ++result.candidate_lines;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      reject(result, line_no, line, "missing TAB separator");
      continue;
    }
    auto prefix = split_key_prefix(text::trim(line.substr(0, tab)));
    std::string_view value = text::trim(line.substr(tab + 1));
    if (!prefix || value.empty()) {
      reject(result, line_no, line, "missing title key or value");
      continue;
    }
    result.records.push_back(AttributeRecord{std::move(prefix->key), kind, std::string(value)});
  }
}

void parse_business(std::istream& in, ParseResult<AttributeRecord>& result) {
  std::optional<TitleKey> current;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.starts_with("MV:")) {
      auto prefix = split_key_prefix(text::trim(line.substr(3)));
      if (prefix) {
        current = std::move(prefix->key);
      } else {
        current.reset();
        ++result.candidate_lines;
        reject(result, line_no, line, "malformed MV header");
      }
      continue;
    }
    if (!line.starts_with("BT:")) continue;
    ++result.candidate_lines;
    std::string_view value = text::trim(line.substr(3));
    if (!current) {
      reject(result, line_no, line, "BT line without MV header");
      continue;
    }
    if (value.empty()) {
      reject(result, line_no, line, "empty BT value");
      continue;
    }
    result.records.push_back(AttributeRecord{*current, AttributeKind::BudgetLine, std::string(value)});
  }
}

}  // namespace

ParseResult<AttributeRecord> parse_attributes(std::istream& in, AttributeKind kind) {
  require_readable(in, to_string(kind));
  ParseResult<AttributeRecord> result;
  if (kind == AttributeKind::BudgetLine) {
    parse_business(in, result);
  } else {
    parse_tabbed_attributes(in, kind, result);
  }
  finish(result, in, to_string(kind));
  return result;
}

Money extract_amount(std::string_view raw) {
  static const std::regex pattern(R"((^|[^A-Za-z])([A-Z]{3})[ \t]*([0-9][0-9,]*))");
  std::string s(raw);
  std::smatch m;
  if (!std::regex_search(s, m, pattern)) {
    throw FormatError(fmt::format("no currency amount in '{}'", raw));
  }
  Money money;
  money.currency = m[2].str();
  std::uint64_t amount = 0;
  for (char c : m[3].str()) {
    if (c == ',') continue;
    std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (amount > (UINT64_MAX - digit) / 10) {
      throw FormatError(fmt::format("amount overflows in '{}'", raw));
    }
    amount = amount * 10 + digit;
  }
  money.amount = amount;
  return money;
}

ParseResult<FinanceRecord> parse_boxoffice_csv(std::istream& in) {
  static constexpr std::string_view kHeader = "title,year,budget,domestic,foreign,worldwide";
  require_readable(in, "box-office");
  ParseResult<FinanceRecord> result;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = text::trim(raw);
    if (line.empty()) continue;
    if (!have_header) {
      if (line != kHeader) {
        throw FormatError(fmt::format("box-office CSV: expected header '{}'", kHeader));
      }
      have_header = true;
      continue;
    }
    auto fields = text::split(line, ',');
    if (fields.size() != 6) {
      throw FormatError(fmt::format("box-office CSV line {}: expected 6 columns, found {}",
                                    line_no, fields.size()));
    }
    ++result.candidate_lines;
    auto key = parse_title_key(fmt::format("{} ({})", text::trim(fields[0]), text::trim(fields[1])));
    if (!key) {
      throw FormatError(fmt::format("box-office CSV line {}: bad title or year", line_no));
    }
    FinanceRecord rec;
    rec.key = std::move(*key);
    std::array<std::optional<Money>*, 4> slots{&rec.budget, &rec.domestic, &rec.foreign,
                                               &rec.worldwide};
    for (std::size_t i = 0; i < slots.size(); ++i) {
      std::string_view cell = text::trim(fields[i + 2]);
      if (cell.empty()) continue;
      auto amount = text::parse_u64(cell);
      if (!amount) {
        throw FormatError(fmt::format("box-office CSV line {}: non-numeric amount '{}'",
                                      line_no, cell));
      }
      *slots[i] = Money{*amount, "USD"};
    }
    if (rec.worldwide && rec.domestic && rec.foreign &&
        rec.worldwide->amount < std::max(rec.domestic->amount, rec.foreign->amount)) {
      reject(result, line_no, line, "worldwide below domestic or foreign");
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  if (in.bad()) throw IngestError("read failure in box-office input");
  if (!have_header) throw FormatError("box-office CSV: missing header");
  return result;
}

}  // namespace moviepop

#include <fstream>
#include <functional>

#include <fmt/format.h>

#include "moviepop/errors.hpp"
#include "moviepop/store.hpp"
#include "text.hpp"

namespace moviepop {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write {}", path.string()));
  return out;
}

std::string money_cell(const std::optional<Money>& m) {
  return m ? fmt::format("{} {}", m->currency, m->amount) : std::string();
}

std::optional<Money> parse_money_cell(std::string_view cell, const std::string& where) {
  if (cell.empty()) return std::nullopt;
  auto space = cell.find(' ');
  auto amount = space == std::string_view::npos ? std::nullopt
                                                : text::parse_u64(cell.substr(space + 1));
  if (!amount || space != 3) throw FormatError(fmt::format("{}: bad amount '{}'", where, cell));
  return Money{*amount, std::string(cell.substr(0, 3))};
}

void read_table(const std::filesystem::path& path, std::string_view header, std::size_t columns,
                const std::function<void(const std::vector<std::string_view>&,
                                         const std::string&)>& on_row) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(fmt::format("cannot read {}", path.string()));
  std::string line;
  if (!std::getline(in, line) || text::strip_cr(line) != header) {
    throw FormatError(fmt::format("{}: expected header '{}'", path.string(), header));
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view row = text::strip_cr(line);
    if (row.empty()) continue;
    auto fields = text::split(row, '\t');
    std::string where = fmt::format("{}:{}", path.filename().string(), line_no);
    if (fields.size() != columns) {
      throw FormatError(fmt::format("{}: expected {} columns", where, columns));
    }
    on_row(fields, where);
  }
}

TitleKey key_cell(std::string_view cell, const std::string& where) {
  auto key = parse_title_key(cell);
  if (!key) throw FormatError(fmt::format("{}: bad title key '{}'", where, cell));
  return std::move(*key);
}

}  // namespace

void save_store(const MovieStore& store, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_out(dir / "movies.tsv");
    out << "key\tkind\n";
    for (const auto& [key, m] : store.movies()) out << key.str() << '\t' << to_string(m.kind) << '\n';
  }
  {
    auto out = open_out(dir / "ratings.tsv");
    out << "key\tvotes\trating\n";
    for (const auto& [key, r] : store.ratings()) {
      out << key.str() << '\t' << r.votes << '\t' << r.rating.str() << '\n';
    }
  }
  {
    auto out = open_out(dir / "credits.tsv");
    out << "person\trole\tkey\n";
    for (const auto& c : store.credits()) {
      out << c.person << '\t' << to_string(c.role) << '\t' << c.key.str() << '\n';
    }
  }
  {
    auto out = open_out(dir / "attributes.tsv");
    out << "key\tkind\tvalue\n";
    for (const auto& a : store.attributes()) {
      out << a.key.str() << '\t' << to_string(a.kind) << '\t' << a.value << '\n';
    }
  }
  {
    auto out = open_out(dir / "finances.tsv");
    out << "key\tbudget\tdomestic\tforeign\tworldwide\n";
    for (const auto& [key, f] : store.finances()) {
      out << key.str() << '\t' << money_cell(f.budget) << '\t' << money_cell(f.domestic) << '\t'
          << money_cell(f.foreign) << '\t' << money_cell(f.worldwide) << '\n';
    }
  }
}

MovieStore load_store(const std::filesystem::path& dir) {
  ParsedTables tables;
  read_table(dir / "movies.tsv", "key\tkind", 2, [&](const auto& f, const std::string& where) {
    auto kind = movie_kind_from_string(f[1]);
    if (!kind) throw FormatError(where + ": unknown kind");
    tables.movies.push_back(MovieRecord{key_cell(f[0], where), *kind});
  });
  read_table(dir / "ratings.tsv", "key\tvotes\trating", 3, [&](const auto& f, const std::string& where) {
    auto votes = text::parse_u64(f[1]);
    auto rating = Rating::parse(f[2]);
    if (!votes || !rating) throw FormatError(where + ": bad votes or rating");
    tables.ratings.push_back(RatingRecord{key_cell(f[0], where), *votes, *rating});
  });
  read_table(dir / "credits.tsv", "person\trole\tkey", 3, [&](const auto& f, const std::string& where) {
    auto role = credit_role_from_string(f[1]);
    if (!role || f[0].empty()) throw FormatError(where + ": bad person or role");
    tables.credits.push_back(CreditRecord{std::string(f[0]), *role, key_cell(f[2], where)});
  });
  read_table(dir / "attributes.tsv", "key\tkind\tvalue", 3, [&](const auto& f, const std::string& where) {
    auto kind = attribute_kind_from_string(f[1]);
    if (!kind || f[2].empty()) throw FormatError(where + ": bad attribute kind or value");
    tables.attributes.push_back(AttributeRecord{key_cell(f[0], where), *kind, std::string(f[2])});
  });
  read_table(dir / "finances.tsv", "key\tbudget\tdomestic\tforeign\tworldwide", 5,
             [&](const auto& f, const std::string& where) {
               FinanceRecord rec;
               rec.key = key_cell(f[0], where);
               rec.budget = parse_money_cell(f[1], where);
               rec.domestic = parse_money_cell(f[2], where);
               rec.foreign = parse_money_cell(f[3], where);
               rec.worldwide = parse_money_cell(f[4], where);
               tables.finances.push_back(std::move(rec));
             });
  return build_store(std::move(tables));
}

}  // namespace moviepop

#include "moviepop/dataset.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "moviepop/errors.hpp"
#include "text.hpp"

namespace moviepop {
namespace {

constexpr std::string_view kRolePrefix = "#role:";
constexpr std::string_view kClassColumn = "class";

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct Cell {
  std::string text;
  bool quoted = false;
};

// RFC 4180 style splitting of one line; embedded newlines are not supported.
std::vector<Cell> split_csv(std::string_view line, std::size_t line_no) {
  std::vector<Cell> cells;
  std::size_t i = 0;
  while (true) {
    Cell cell;
    if (i < line.size() && line[i] == '"') {
      cell.quoted = true;
      ++i;
      while (true) {
        if (i >= line.size()) {
          throw FormatError(fmt::format("dataset line {}: unterminated quote", line_no));
        }
        if (line[i] == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            cell.text += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        cell.text += line[i++];
      }
      if (i < line.size() && line[i] != ',') {
        throw FormatError(fmt::format("dataset line {}: text after closing quote", line_no));
      }
    } else {
      std::size_t end = line.find(',', i);
      if (end == std::string_view::npos) end = line.size();
      cell.text = std::string(line.substr(i, end - i));
      i = end;
    }
    cells.push_back(std::move(cell));
    if (i >= line.size()) break;
    ++i;  // comma
  }
  return cells;
}

}  // namespace

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Identifier: return "identifier";
    case Role::Feature: return "feature";
    case Role::Excluded: return "excluded";
  }
  return "feature";
}

std::optional<Role> role_from_string(std::string_view s) {
  for (auto r : {Role::Identifier, Role::Feature, Role::Excluded}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

Dataset::Dataset(std::vector<Column> schema) : schema_(std::move(schema)) {
  std::set<std::string_view> seen;
  for (const auto& c : schema_) {
    if (c.name.empty() || c.name == kClassColumn || !seen.insert(c.name).second) {
      throw ParameterError(fmt::format("invalid or duplicate column name '{}'", c.name));
    }
  }
}

void Dataset::add(Instance instance) {
  if (instance.values.size() != schema_.size()) {
    throw ParameterError(fmt::format("instance has {} values, schema has {} columns",
                                     instance.values.size(), schema_.size()));
  }
  instances_.push_back(std::move(instance));
}

std::optional<std::size_t> Dataset::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Dataset::feature_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < schema_.size(); ++i) {
    if (schema_[i].role == Role::Feature) out.push_back(i);
  }
  return out;
}

std::array<std::size_t, kClassCount> Dataset::class_counts() const {
  std::array<std::size_t, kClassCount> counts{};
  for (const auto& inst : instances_) ++counts[index_of(inst.label)];
  return counts;
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
  Dataset out(schema_);
  out.instances_.reserve(indices.size());
  for (std::size_t i : indices) out.instances_.push_back(instances_.at(i));
  return out;
}

void write_dataset(const Dataset& dataset, std::ostream& out) {
  out << kRolePrefix;
  for (const auto& c : dataset.schema()) out << to_string(c.role) << ',';
  out << kClassColumn << '\n';
  for (const auto& c : dataset.schema()) out << c.name << ',';
  out << kClassColumn << '\n';
  for (const auto& inst : dataset.instances()) {
    for (const auto& v : inst.values) {
      if (is_missing(v)) {
        out << '?';
      } else if (const double* d = std::get_if<double>(&v)) {
        out << text::format_number(*d);
      } else {
        out << quote(std::get<std::string>(v));
      }
      out << ',';
    }
    out << to_string(inst.label) << '\n';
  }
}

Dataset read_dataset(std::istream& in) {
  if (!in) throw IngestError("cannot read dataset");
  std::string raw;
  std::size_t line_no = 0;
  auto next_line = [&](std::string_view& line) {
    while (std::getline(in, raw)) {
      ++line_no;
      line = text::strip_cr(raw);
      if (!text::trim(line).empty()) return true;
    }
    return false;
  };

  std::string_view line;
  if (!next_line(line) || !line.starts_with(kRolePrefix)) {
    throw FormatError("dataset: missing '#role:' line");
  }
  auto role_names = text::split(line.substr(kRolePrefix.size()), ',');
  if (role_names.empty() || role_names.back() != kClassColumn) {
    throw FormatError("dataset: role line must end with 'class'");
  }
  std::vector<Role> roles;
  for (std::size_t i = 0; i + 1 < role_names.size(); ++i) {
    auto role = role_from_string(role_names[i]);
    if (!role) throw FormatError(fmt::format("dataset: unknown role '{}'", role_names[i]));
    roles.push_back(*role);
  }

  if (!next_line(line)) throw FormatError("dataset: missing header row");
  auto names = text::split(line, ',');
  if (names.size() != role_names.size() || names.back() != kClassColumn) {
    throw FormatError("dataset: header does not match role line");
  }
  std::vector<Column> schema;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    schema.push_back(Column{std::string(names[i]), roles[i]});
  }
  Dataset dataset(std::move(schema));

  while (next_line(line)) {
    auto cells = split_csv(line, line_no);
    if (cells.size() != names.size()) {
      throw FormatError(fmt::format("dataset line {}: expected {} cells, found {}", line_no,
                                    names.size(), cells.size()));
    }
    Instance inst;
    inst.values.reserve(roles.size());
    for (std::size_t i = 0; i < roles.size(); ++i) {
      const Cell& cell = cells[i];
      if (cell.quoted) {
        inst.values.emplace_back(cell.text);
      } else if (cell.text == "?") {
        inst.values.emplace_back(Missing{});
      } else if (auto d = text::parse_double(cell.text)) {
        inst.values.emplace_back(*d);
      } else {
        throw FormatError(fmt::format("dataset line {}: bad cell '{}'", line_no, cell.text));
      }
    }
    auto label = popularity_from_string(cells.back().text);
    if (!label) {
      throw FormatError(fmt::format("dataset line {}: unknown class '{}'", line_no,
                                    cells.back().text));
    }
    inst.label = *label;
    dataset.add(std::move(inst));
  }
  if (in.bad()) throw IngestError("read failure in dataset");
  return dataset;
}

void export_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write {}", path.string()));
  write_dataset(dataset, out);
  if (!out) throw IoError(fmt::format("write failed for {}", path.string()));
}

Dataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(fmt::format("cannot read {}", path.string()));
  return read_dataset(in);
}

}  // namespace moviepop

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "moviepop/popularity.hpp"

namespace moviepop {

enum class Role { Identifier, Feature, Excluded };

std::string_view to_string(Role role);
std::optional<Role> role_from_string(std::string_view s);

struct Column {
  std::string name;
  Role role = Role::Feature;
  bool operator==(const Column&) const = default;
};

struct Missing {
  bool operator==(const Missing&) const = default;
};

/// A cell: missing, numeric or text.
using Value = std::variant<Missing, double, std::string>;

inline bool is_missing(const Value& v) { return std::holds_alternative<Missing>(v); }

/// Numeric content of a cell, nullopt for missing or text cells.
inline std::optional<double> number_of(const Value& v) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  return std::nullopt;
}

struct Instance {
  std::vector<Value> values;  // one per schema column
  PopularityClass label = PopularityClass::Excellent;
  bool operator==(const Instance&) const = default;
};

/// Instances over a declared schema plus the nominal class label, which is
/// implicit and always the last column on disk.
class Dataset {
 public:
  Dataset() = default;
  /// Throws ParameterError on duplicate column names.
  explicit Dataset(std::vector<Column> schema);

  const std::vector<Column>& schema() const { return schema_; }
  const std::vector<Instance>& instances() const { return instances_; }
  std::size_t size() const { return instances_.size(); }
  bool empty() const { return instances_.empty(); }

  /// Throws ParameterError when the instance width does not match.
  void add(Instance instance);

  std::optional<std::size_t> column_index(std::string_view name) const;
  std::vector<std::size_t> feature_indices() const;

  /// Per-label instance counts in label order.
  std::array<std::size_t, kClassCount> class_counts() const;

  /// Same schema, instances picked by index in the given order.
  Dataset subset(const std::vector<std::size_t>& indices) const;

  bool operator==(const Dataset&) const = default;

 private:
  std::vector<Column> schema_;
  std::vector<Instance> instances_;
};

/// CSV layout: a `#role:` line naming each column's role (the class column
/// is `class`), a header row, then one row per instance. Text cells are
/// always double-quoted; `?` marks a missing value.
void write_dataset(const Dataset& dataset, std::ostream& out);
Dataset read_dataset(std::istream& in);

void export_dataset(const Dataset& dataset, const std::filesystem::path& path);
Dataset load_dataset(const std::filesystem::path& path);

}  // namespace moviepop

#pragma once

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "moviepop/dataset.hpp"
#include "moviepop/evaluation.hpp"
#include "moviepop/random.hpp"

namespace moviepop::testing {

inline std::filesystem::path corpus_dir() { return MOVIEPOP_CORPUS_DIR; }

/// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("moviepop_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Feature-only dataset named f0, f1, ...; NaN cells become missing.
inline Dataset numeric_dataset(const std::vector<std::vector<double>>& rows,
                               const std::vector<PopularityClass>& labels) {
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  std::vector<Column> schema;
  for (std::size_t i = 0; i < width; ++i) schema.push_back({"f" + std::to_string(i), Role::Feature});
  Dataset d(schema);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Instance inst;
    for (double v : rows[r]) {
      if (std::isnan(v)) {
        inst.values.emplace_back(Missing{});
      } else {
        inst.values.emplace_back(v);
      }
    }
    inst.label = labels[r];
    d.add(std::move(inst));
  }
  return d;
}

/// Small random dataset over small integer values so ties and repeated
/// values are common.
inline Dataset random_dataset(Rng& rng, std::size_t min_rows, std::size_t max_rows,
                              std::size_t max_features, double missing_rate = 0.0,
                              std::size_t classes = 4, int value_range = 6) {
  const std::size_t n = min_rows + rng.below(max_rows - min_rows + 1);
  const std::size_t width = 1 + rng.below(max_features);
  std::vector<std::vector<double>> rows(n, std::vector<double>(width));
  std::vector<PopularityClass> labels(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (auto& v : rows[r]) {
      v = rng.uniform() < missing_rate ? NAN : static_cast<double>(rng.below(value_range));
    }
    labels[r] = class_at(rng.below(classes));
  }
  return numeric_dataset(rows, labels);
}

/// Rating-like label from a latent score in [1, 10].
inline PopularityClass label_for_score(double s) {
  if (s >= 7.5) return PopularityClass::Excellent;
  if (s >= 5.0) return PopularityClass::Average;
  if (s >= 2.5) return PopularityClass::Poor;
  return PopularityClass::Terrible;
}

/// Pre-release shaped dataset where the class is driven by director_rank
/// (small noise) and budget carries only a weak signal.
inline Dataset director_driven_dataset(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Dataset d({{"year", Role::Feature},
             {"budget", Role::Feature},
             {"director_rank", Role::Feature},
             {"male_cast_rank", Role::Feature},
             {"female_cast_rank", Role::Feature}});
  for (std::size_t i = 0; i < n; ++i) {
    const double director = 1.0 + 9.0 * rng.uniform();
    const double rating = std::clamp(director + (rng.uniform() - 0.5) * 0.6, 1.0, 10.0);
    const double budget = 1e6 * (20 + 100 * rng.uniform() + 4 * director);
    const double male = 6 * rng.uniform() + 0.4 * director * rng.uniform() * 3;
    const double female = 6 * rng.uniform();
    const double year = 2001 + static_cast<double>(rng.below(10));
    Instance inst{{year, budget, director, male, female}, label_for_score(rating)};
    d.add(std::move(inst));
  }
  return d;
}

inline ConfusionMatrix c45_published_matrix() {
  return ConfusionMatrix({{{223, 34, 2, 0}, {42, 171, 35, 0}, {6, 58, 223, 1}, {0, 0, 7, 15}}});
}

inline ConfusionMatrix part_published_matrix() {
  return ConfusionMatrix({{{214, 41, 4, 0}, {32, 172, 44, 0}, {3, 48, 236, 1}, {0, 0, 9, 13}}});
}

}  // namespace moviepop::testing

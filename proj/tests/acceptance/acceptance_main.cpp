// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Each check carries its own time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "fixtures.hpp"
#include "moviepop/builder.hpp"
#include "moviepop/correlation.hpp"
#include "moviepop/evaluation.hpp"
#include "moviepop/learners/part.hpp"
#include "moviepop/learners/ranking.hpp"
#include "moviepop/learners/tree.hpp"
#include "moviepop/popularity.hpp"
#include "oracles.hpp"

using namespace moviepop;
namespace fs = std::filesystem;

namespace {

// Collects the first few failure messages of one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok) ++failed;
  }
  std::size_t failed = 0;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

void metric_reproduction(Check& c) {
  struct Row {
    double tp, fp, precision;
  };
  auto verify = [&](const ConfusionMatrix& m, const std::array<Row, 4>& rows, double pct,
                    const char* tag) {
    MatrixMetrics r = metrics_from_matrix(m);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", r.accuracy * 100);
    char want[32];
    std::snprintf(want, sizeof want, "%.4f", pct);
    c.expect(std::string(buf) == want, std::string(tag) + " accuracy " + buf + " != " + want);
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& k = r.per_class[i];
      c.expect(std::abs(k.tp_rate - rows[i].tp) <= 0.001, std::string(tag) + " tp " + fmt_double(k.tp_rate));
      c.expect(std::abs(k.recall - rows[i].tp) <= 0.001, std::string(tag) + " recall " + fmt_double(k.recall));
      c.expect(std::abs(k.fp_rate - rows[i].fp) <= 0.001, std::string(tag) + " fp " + fmt_double(k.fp_rate));
      c.expect(std::abs(k.precision - rows[i].precision) <= 0.001,
               std::string(tag) + " precision " + fmt_double(k.precision));
    }
  };
  verify(testing::c45_published_matrix(),
         {{{0.861, 0.086, 0.823}, {0.69, 0.162, 0.65}, {0.774, 0.083, 0.835}, {0.682, 0.001, 0.938}}},
         77.3562, "c45");
  verify(testing::part_published_matrix(),
         {{{0.826, 0.063, 0.859}, {0.694, 0.156, 0.659}, {0.819, 0.108, 0.805}, {0.591, 0.001, 0.929}}},
         77.7234, "part");
}

void class_binning(Check& c) {
  std::array<std::size_t, kClassCount> counts{};
  for (int t = 10; t <= 100; ++t) {
    const PopularityClass got = assign_class(t / 10.0);
    const PopularityClass want = t >= 75   ? PopularityClass::Excellent
                                 : t >= 50 ? PopularityClass::Average
                                 : t >= 25 ? PopularityClass::Poor
                                           : PopularityClass::Terrible;
    c.expect(got == want, "rating " + std::to_string(t / 10.0));
    ++counts[index_of(got)];
  }
  c.expect(counts[0] + counts[1] + counts[2] + counts[3] == 91, "grid size");
  c.expect(counts == std::array<std::size_t, 4>{26, 25, 25, 15}, "bin sizes");
}

void balancing(Check& c) {
  Rng rng(2011);
  Dataset d({{"title", Role::Identifier}, {"votes", Role::Excluded}, {"rating", Role::Excluded}});
  for (int step = 50; step <= 74; ++step) {
    const std::size_t n = 10 + rng.below(15);
    for (std::size_t j = 0; j < n; ++j) {
      d.add(Instance{{"S" + std::to_string(step) + "_" + std::to_string(j) + " (2005)",
                      static_cast<double>(1000 + rng.below(50000)), step / 10.0},
                     PopularityClass::Average});
    }
  }
  for (int t : {80, 90, 30, 12}) {
    d.add(Instance{{"Other" + std::to_string(t) + " (2005)", 5000.0, t / 10.0}, assign_class(t / 10.0)});
  }
  Dataset out = balance_average(d, 10);
  c.expect(out.class_counts()[index_of(PopularityClass::Average)] == 250,
           "average count " + std::to_string(out.class_counts()[1]));
  c.expect(out.size() == 254, "non-average instances pass through");
}

void split_oracle(Check& c) {
  Rng rng(4);
  std::size_t datasets = 0;
  for (int trial = 0; trial < 600; ++trial) {
    Dataset d = testing::random_dataset(rng, 2, 16, 4, trial % 4 == 0 ? 0.1 : 0.0, 2 + rng.below(3));
    ++datasets;
    for (bool ratio : {true, false}) {
      LearnerParams p;
      p.use_gain_ratio = ratio;
      auto s = best_split(d, p);
      auto o = testing::oracle_best_split(d, static_cast<double>(p.min_leaf), ratio);
      bool same = s.has_value() == o.has_value();
      if (same && s) {
        same = s->attribute == o->attribute && s->threshold == o->threshold &&
               std::abs(s->gain - o->gain) < 1e-9 && std::abs(s->gain_ratio - o->ratio) < 1e-9;
      }
      c.expect(same, "disagreement on dataset " + std::to_string(trial));
    }
  }
  c.expect(datasets >= 200, "dataset count");
}

void pruning_property(Check& c) {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Dataset d = testing::random_dataset(rng, 20, 120, 4, 0.05);
    FeatureTable table(d);
    auto rows = all_rows(table);
    HoldoutSplit h = stratified_holdout(table, rows, 1.0 / 3.0, rng.below(1u << 20));
    LearnerParams p;
    DecisionTree grown = grow_tree(table, h.grow, p);
    DecisionTree pruned = reduced_error_prune(grown, table, h.prune);
    c.expect(error_count(pruned, table, h.prune) <= error_count(grown, table, h.prune) + 1e-9,
             "prune error grew on split " + std::to_string(trial));
    c.expect(pruned.node_count() <= grown.node_count(), "node count grew on split " + std::to_string(trial));
  }
}

std::vector<Dataset> learner_fixtures() {
  std::vector<Dataset> out;
  Rng rng(6);
  for (int i = 0; i < 40; ++i) out.push_back(testing::random_dataset(rng, 5, 80, 4, i % 3 == 0 ? 0.2 : 0.0));
  out.push_back(testing::director_driven_dataset(300, 6));
  return out;
}

void part_totality(Check& c) {
  int f = 0;
  for (const Dataset& d : learner_fixtures()) {
    LearnerParams p;
    p.seed = 17;
    RuleList a = part_learn(d, p);
    RuleList b = part_learn(d, p);
    c.expect(a == b, "nondeterministic rules on fixture " + std::to_string(f));
    for (const auto& inst : d.instances()) {
      // First-match replay, default included.
      PopularityClass expected = a.default_class;
      for (const auto& r : a.rules) {
        if (r.matches(inst)) {
          expected = r.conclusion;
          break;
        }
      }
      c.expect(a.classify(inst) == expected, "first-match mismatch on fixture " + std::to_string(f));
    }
    ++f;
  }
}

void cv_bookkeeping(Check& c) {
  auto fixtures = learner_fixtures();
  for (std::size_t f = 0; f < fixtures.size(); f += 4) {
    const Dataset& d = fixtures[f];
    for (std::size_t k : {2u, 5u, 10u}) {
      if (k > d.size()) continue;
      auto folds = stratified_folds(d, k, 11);
      for (auto cls : kAllClasses) {
        std::size_t lo = SIZE_MAX, hi = 0;
        for (const auto& fold : folds) {
          std::size_t n = 0;
          for (auto i : fold) n += d.instances()[i].label == cls;
          lo = std::min(lo, n);
          hi = std::max(hi, n);
        }
        c.expect(hi - lo <= 1, "fold imbalance k=" + std::to_string(k));
      }
      for (auto learner : {LearnerKind::C45, LearnerKind::Part}) {
        EvalReport r = cross_validate(learner, d, k, 11, LearnerParams{});
        c.expect(r.matrix.total() == d.size(), "matrix total k=" + std::to_string(k));
      }
    }
  }
}

void correlation(Check& c) {
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
  c.expect(near(pearson(PairedSeries({1, 2, 3}, {1, 2, 3})), 1.0), "y == x");
  c.expect(near(pearson(PairedSeries({1, 2, 3}, {-1, -2, -3})), -1.0), "y == -x");
  c.expect(near(pearson(PairedSeries({1, 2, 3}, {1, 3, 2})), 0.5), "[1,2,3] vs [1,3,2]");
  auto t = trend_line(PairedSeries({0, 1, 2}, {0, 2, 2}));
  c.expect(near(t.slope, 1.0) && near(t.intercept, 1.0 / 3.0), "trend line");
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 2 + rng.below(60);
    std::vector<double> x(n), y(n), ax(n);
    const double a = (rng.below(2) == 0 ? 1 : -1) * (0.01 + rng.uniform() * 100);
    const double b = (rng.uniform() - 0.5) * 1e6;
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = rng.uniform() * 1e8;
      y[j] = 0.5 * x[j] + rng.uniform() * 5e7;
      ax[j] = a * x[j] + b;
    }
    const double r = pearson(PairedSeries(x, y));
    c.expect(std::abs(r - pearson(PairedSeries(y, x))) <= 1e-12, "symmetry");
    c.expect(std::abs(pearson(PairedSeries(ax, y)) - (a > 0 ? r : -r)) <= 1e-9, "affine invariance");
    c.expect(std::abs(r - testing::oracle_pearson(x, y)) <= 1e-9, "oracle agreement");
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> header_of(const fs::path& csv) {
  std::ifstream in(csv);
  std::string role, header;
  std::getline(in, role);
  std::getline(in, header);
  std::vector<std::string> cols;
  std::stringstream s(header);
  for (std::string col; std::getline(s, col, ',');) cols.push_back(col);
  return cols;
}

void pipeline_once(Check& c, const fs::path& dir) {
  const std::string conf = (testing::corpus_dir() / "corpus.conf").string();
  const std::string out = dir.string();
  const std::string store = (dir / "store").string();
  std::ostringstream sink, err;
  auto step = [&](std::vector<std::string> args) {
    int code = cli::run_cli(args, sink, err);
    c.expect(code == 0, args.front() + " exited " + std::to_string(code) + ": " + err.str());
  };
  const std::string d1 = (dir / "dataset1.csv").string(), d2 = (dir / "dataset2.csv").string();
  step({"ingest", "--config", conf, "--out", store});
  step({"build", "--config", conf, "--dataset", "1", "--store", store, "--out", out});
  step({"evaluate", "--config", conf, "--learner", "c45", "--data", d1, "--out", out});
  step({"evaluate", "--config", conf, "--learner", "part", "--data", d1, "--out", out});
  step({"rank", "--config", conf, "--data", d1, "--out", out});
  step({"build", "--config", conf, "--dataset", "2", "--store", store, "--out", out});
  step({"correlate", "--config", conf, "--data", d2, "--out", out});

  c.expect(header_of(dir / "dataset1.csv") ==
               std::vector<std::string>{"id", "title", "year", "language", "country", "budget",
                                        "director_rank", "male_cast_rank", "female_cast_rank",
                                        "votes", "rating", "class"},
           "dataset 1 columns");
  c.expect(header_of(dir / "dataset2.csv") ==
               std::vector<std::string>{"id", "title", "budget", "domestic", "foreign",
                                        "worldwide", "votes", "rating", "class"},
           "dataset 2 columns");
  c.expect(load_dataset(dir / "dataset1.csv").size() > 0, "dataset 1 non-empty");
  for (const char* json : {"c45_report.json", "part_report.json", "correlation.json"}) {
    bool ok = nlohmann::json::accept(slurp(dir / json));
    c.expect(ok, std::string(json) + " is not valid JSON");
  }
  std::size_t svgs = 0;
  for (const auto& e : fs::directory_iterator(dir)) svgs += e.path().extension() == ".svg";
  c.expect(svgs == 3, "svg count " + std::to_string(svgs));
}

void end_to_end(Check& c) {
  testing::TempDir a("accept_a"), b("accept_b");
  pipeline_once(c, a.path());
  pipeline_once(c, b.path());
  for (const auto& e : fs::recursive_directory_iterator(a.path())) {
    if (!e.is_regular_file()) continue;
    const fs::path rel = fs::relative(e.path(), a.path());
    c.expect(slurp(e.path()) == slurp(b.path() / rel), "rerun differs: " + rel.string());
  }
}

void director_dominance(Check& c) {
  Dataset d = testing::director_driven_dataset(600, 2011);
  auto ranks = rank_attributes(d);
  c.expect(ranks.front().name == "director_rank", "top ranked: " + ranks.front().name);
  DecisionTree t = train_c45(d, LearnerParams{});
  c.expect(!t.root().is_leaf() && d.schema()[t.root().split->attribute].name == "director_rank",
           "root split attribute");
  auto bi = d.column_index("budget");
  double budget_gain = 0;
  for (const auto& r : ranks) {
    if (r.attribute == *bi) budget_gain = r.gain;
  }
  c.expect(budget_gain > 0 && budget_gain < ranks.front().gain, "budget carries a weaker signal");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "metric reproduction from published confusion matrices", 1, metric_reproduction},
      {2, "class binning partitions the one-decimal grid", 1, class_binning},
      {3, "balancing keeps exactly 250 Average instances", 1, balancing},
      {4, "best_split agrees with exhaustive enumeration", 30, split_oracle},
      {5, "reduced-error pruning never adds error or nodes", 30, pruning_property},
      {6, "PART totality and determinism", 10, part_totality},
      {7, "cross-validation bookkeeping", 10, cv_bookkeeping},
      {8, "pearson examples, symmetry and affine invariance", 5, correlation},
      {9, "end-to-end pipeline on the fixture corpus", 60, end_to_end},
      {10, "director rank dominates on director-driven data", 10, director_dominance},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_seconds) {
      check.expect(false, "took " + fmt_double(secs) + " s, budget " + fmt_double(cr.budget_seconds));
    }
    const bool pass = check.failed == 0;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %2d: %s (%.3f s)\n", pass ? "PASS" : "FAIL", cr.id, cr.name.c_str(), secs);
    for (const auto& f : check.failures) std::printf("         - %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

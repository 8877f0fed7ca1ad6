#include "cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cli/config.hpp"
#include "moviepop/builder.hpp"
#include "moviepop/correlation.hpp"
#include "moviepop/dataset.hpp"
#include "moviepop/errors.hpp"
#include "moviepop/evaluation.hpp"
#include "moviepop/ingest.hpp"
#include "moviepop/learners/model_io.hpp"
#include "moviepop/learners/part.hpp"
#include "moviepop/learners/ranking.hpp"
#include "moviepop/learners/tree.hpp"
#include "moviepop/plot.hpp"
#include "moviepop/report.hpp"
#include "moviepop/store.hpp"

namespace fs = std::filesystem;

namespace moviepop::cli {
namespace {

// Raised for bad invocations that CLI11 cannot see (missing files, bad ids).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  if (!file) throw IoError(fmt::format("cannot write {}", path.string()));
}

std::string config_header(const RunConfig& config) {
  std::string out;
  for (const auto& [k, v] : config.echo()) out += fmt::format("# {} = {}\n", k, v);
  return out;
}

template <typename Record, typename Parse>
std::optional<ParseResult<Record>> parse_file(const fs::path& path, Parse parse) {
  if (path.empty()) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(fmt::format("cannot open input file {}", path.string()));
  return parse(in);
}

struct TableStats {
  std::string name;
  std::size_t records = 0;
  std::size_t candidates = 0;
  std::size_t skipped = 0;
};

template <typename Record>
void absorb(std::optional<ParseResult<Record>>& result, std::vector<Record>& sink,
            std::vector<TableStats>& stats, std::string name, std::ostream& err) {
  if (!result) return;
  stats.push_back({std::move(name), result->records.size(), result->candidate_lines,
                   result->skipped});
  for (const auto& d : result->diagnostics) err << "skipped: " << d << '\n';
  sink.insert(sink.end(), std::make_move_iterator(result->records.begin()),
              std::make_move_iterator(result->records.end()));
}

int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.movies.empty() || !fs::is_regular_file(config.movies)) {
    throw UsageError("a readable movies file is required (movies = PATH)");
  }
  if (config.ratings.empty() || !fs::is_regular_file(config.ratings)) {
    throw UsageError("a readable ratings file is required (ratings = PATH)");
  }

  auto movies = parse_file<MovieRecord>(config.movies, parse_movies);
  auto ratings = parse_file<RatingRecord>(config.ratings, parse_ratings);
  auto credits_of = [](CreditRole role) {
    return [role](std::istream& in) { return parse_credits(in, role); };
  };
  auto attributes_of = [](AttributeKind kind) {
    return [kind](std::istream& in) { return parse_attributes(in, kind); };
  };
  auto directors = parse_file<CreditRecord>(config.directors, credits_of(CreditRole::Director));
  auto actors = parse_file<CreditRecord>(config.actors, credits_of(CreditRole::Actor));
  auto actresses = parse_file<CreditRecord>(config.actresses, credits_of(CreditRole::Actress));
  auto countries =
      parse_file<AttributeRecord>(config.countries, attributes_of(AttributeKind::Country));
  auto languages =
      parse_file<AttributeRecord>(config.languages, attributes_of(AttributeKind::Language));
  auto business =
      parse_file<AttributeRecord>(config.business, attributes_of(AttributeKind::BudgetLine));
  auto boxoffice = parse_file<FinanceRecord>(config.boxoffice, parse_boxoffice_csv);

  ParsedTables tables;
  std::vector<TableStats> stats;
  absorb(movies, tables.movies, stats, "movies", err);
  absorb(ratings, tables.ratings, stats, "ratings", err);
  absorb(directors, tables.credits, stats, "directors", err);
  absorb(actors, tables.credits, stats, "actors", err);
  absorb(actresses, tables.credits, stats, "actresses", err);
  absorb(countries, tables.attributes, stats, "countries", err);
  absorb(languages, tables.attributes, stats, "languages", err);
  absorb(business, tables.attributes, stats, "business", err);
  absorb(boxoffice, tables.finances, stats, "boxoffice", err);

  MovieStore store = build_store(std::move(tables));
  fs::create_directories(config.out);
  save_store(store, config.out);

  const StoreCounts& c = store.counts();
  std::string summary = config_header(config);
  summary += fmt::format("{:<10} {:>8} {:>10} {:>8}\n", "File", "Records", "Candidates", "Skipped");
  for (const auto& s : stats) {
    summary += fmt::format("{:<10} {:>8} {:>10} {:>8}\n", s.name, s.records, s.candidates, s.skipped);
  }
  summary += "\n";
  summary += fmt::format("{:<10} {:>8}\n", "Table", "Rows");
  summary += fmt::format("{:<10} {:>8}\n", "movies", store.movies().size());
  summary += fmt::format("{:<10} {:>8}\n", "ratings", store.ratings().size());
  summary += fmt::format("{:<10} {:>8}\n", "credits", store.credits().size());
  summary += fmt::format("{:<10} {:>8}\n", "attributes", store.attributes().size());
  summary += fmt::format("{:<10} {:>8}\n", "finances", store.finances().size());
  summary += fmt::format("\nDuplicates dropped: movies {} ratings {} credits {} finances {}\n",
                         c.duplicate_movies, c.duplicate_ratings, c.duplicate_credits,
                         c.duplicate_finances);
  summary += fmt::format("Dangling dropped: ratings {} credits {} attributes {} finances {}\n",
                         c.dangling_ratings, c.dangling_credits, c.dangling_attributes,
                         c.dangling_finances);
  write_text(config.out / "ingest_summary.txt", summary);
  out << summary;
  return kExitOk;
}

int cmd_build(const RunConfig& config, int which, std::ostream& out, std::ostream& err) {
  if (config.store.empty()) throw UsageError("a store directory is required (--store DIR)");
  if (!fs::is_directory(config.store)) {
    throw UsageError(fmt::format("store directory {} does not exist", config.store.string()));
  }
  MovieStore store = load_store(config.store);
  Dataset dataset =
      which == 1 ? build_dataset1(store, config.build) : build_dataset2(store, config.build);

  fs::create_directories(config.out);
  const std::string stem = fmt::format("dataset{}", which);
  export_dataset(dataset, config.out / (stem + ".csv"));

  auto counts = dataset.class_counts();
  std::string summary = config_header(config);
  summary += fmt::format("{:<10} {:>22}\n", "Class", "Total no of instances");
  for (auto c : kAllClasses) {
    summary += fmt::format("{:<10} {:>22}\n", to_string(c), counts[index_of(c)]);
  }
  summary += fmt::format("{:<10} {:>22}\n", "Total", dataset.size());
  write_text(config.out / (stem + "_summary.txt"), summary);
  out << summary;
  if (dataset.size() == 0) err << "warning: dataset " << which << " is empty\n";
  return kExitOk;
}

Dataset load_input(const RunConfig& config) {
  if (config.data.empty()) throw UsageError("a dataset is required (--data PATH)");
  if (!fs::is_regular_file(config.data)) {
    throw UsageError(fmt::format("dataset {} does not exist", config.data.string()));
  }
  return load_dataset(config.data);
}

int cmd_evaluate(const RunConfig& config, const std::string& learner_id, std::ostream& out) {
  auto learner = learner_from_string(learner_id);
  if (!learner) throw UsageError(fmt::format("unknown learner '{}' (use c45 or part)", learner_id));
  Dataset dataset = load_input(config);

  EvalReport report = cross_validate(*learner, dataset, config.folds, config.seed, config.params);
  const ConfigEcho echo = config.echo();

  std::string model = config_header(config);
  if (*learner == LearnerKind::C45) {
    model += render_tree(train_c45(dataset, config.params), dataset.schema());
  } else {
    model += render_rules(part_learn(dataset, config.params), dataset.schema());
  }

  fs::create_directories(config.out);
  const std::string stem(to_string(*learner));
  const std::string plain = render_report(report, ReportFormat::Plain, echo);
  write_text(config.out / (stem + "_report.txt"), plain);
  write_text(config.out / (stem + "_report.json"), render_report(report, ReportFormat::Json, echo));
  write_text(config.out / (stem + "_model.txt"), model);
  out << plain;
  return kExitOk;
}

int cmd_rank(const RunConfig& config, std::ostream& out) {
  Dataset dataset = load_input(config);
  std::string table = render_ranking(rank_attributes(dataset), config.echo());
  fs::create_directories(config.out);
  write_text(config.out / "ranking.txt", table);
  out << table;
  return kExitOk;
}

int cmd_correlate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Dataset dataset = load_input(config);
  CorrelationReport report = correlate_dataset2(dataset);
  const ConfigEcho echo = config.echo();

  fs::create_directories(config.out);
  const std::string plain = render_correlation(report, ReportFormat::Plain, echo);
  write_text(config.out / "correlation.txt", plain);
  write_text(config.out / "correlation.json", render_correlation(report, ReportFormat::Json, echo));
  for (const auto& pair : report.pairs) {
    if (!pair.r) {
      err << fmt::format("warning: {} vs {} is undefined; no plot written\n", pair.x_name,
                         pair.y_name);
      continue;
    }
    PairedSeries series = series_from_dataset(dataset, pair.x_name, pair.y_name);
    scatter_plot(series, trend_line(series),
                 config.out / fmt::format("{}_{}.svg", pair.x_name, pair.y_name));
  }
  out << plain;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Movie popularity classification from IMDb list files", "moviepop"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> config_path;
  std::vector<std::pair<std::string, std::string>> overrides;
  auto flag = [&](CLI::App& sub, const std::string& name, const std::string& key,
                  const std::string& help) {
    sub.add_option_function<std::string>(
        name, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); }, help);
  };

  app.add_option("--config", config_path, "key = value configuration file");
  flag(app, "--seed", "seed", "Seed for fold assignment and pruning holdouts");
  flag(app, "--out", "out", "Output directory");
  flag(app, "--folds", "folds", "Number of cross-validation folds");
  std::vector<std::string> settings;
  app.add_option("--set", settings, "Override any config key (KEY=VALUE)");

  CLI::App* ingest = app.add_subcommand("ingest", "Parse list files into a store directory");
  for (const char* kind : {"movies", "ratings", "directors", "actors", "actresses", "countries",
                           "languages", "business", "boxoffice"}) {
    flag(*ingest, fmt::format("--{}", kind), kind, fmt::format("{} input file", kind));
  }

  CLI::App* build = app.add_subcommand("build", "Build dataset 1 or 2 from a store");
  int which = 0;
  build->add_option("--dataset", which, "Dataset number")->required()->check(CLI::IsMember({1, 2}));
  flag(*build, "--store", "store", "Store directory written by ingest");

  CLI::App* evaluate = app.add_subcommand("evaluate", "Cross-validate a learner on a dataset");
  std::string learner;
  evaluate->add_option("--learner", learner, "c45 or part")->required();
  flag(*evaluate, "--data", "data", "Dataset CSV");

  CLI::App* rank = app.add_subcommand("rank", "Rank features by information gain");
  flag(*rank, "--data", "data", "Dataset CSV");

  CLI::App* correlate = app.add_subcommand("correlate", "Correlate budget with box-office totals");
  flag(*correlate, "--data", "data", "Dataset CSV");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("moviepop");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config;
    if (config_path) load_config_file(config, *config_path);
    for (const auto& [key, value] : overrides) apply_setting(config, key, value);
    for (const auto& s : settings) {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw UsageError(fmt::format("--set expects KEY=VALUE: {}", s));
      apply_setting(config, s.substr(0, eq), s.substr(eq + 1));
    }
    config.params.validate();

    if (ingest->parsed()) return cmd_ingest(config, out, err);
    if (build->parsed()) return cmd_build(config, which, out, err);
    if (evaluate->parsed()) return cmd_evaluate(config, learner, out);
    if (rank->parsed()) return cmd_rank(config, out);
    if (correlate->parsed()) return cmd_correlate(config, out, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace moviepop::cli

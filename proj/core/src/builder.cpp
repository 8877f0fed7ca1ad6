#include "moviepop/builder.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "moviepop/errors.hpp"

namespace moviepop {
namespace {

bool contains(const std::vector<std::string_view>& values, std::string_view wanted) {
  return std::find(values.begin(), values.end(), wanted) != values.end();
}

std::optional<Money> first_usd_budget(const MovieStore& store, const TitleKey& key) {
  for (std::string_view line : store.attribute_values(key, AttributeKind::BudgetLine)) {
    try {
      Money m = extract_amount(line);
      if (m.currency == "USD") return m;
    } catch (const FormatError&) {
      // unparseable budget text is skipped
    }
  }
  return std::nullopt;
}

double cast_sum(const MovieStore& store, const TitleKey& key, CreditRole role,
                const PersonRanks& ranks) {
  double sum = 0;
  for (const CreditRecord* c : store.credits_for(key, role)) {
    if (auto it = ranks.find(c->person); it != ranks.end()) sum += it->second.rank;
  }
  return sum;
}

std::set<TitleKey> rank_universe(const MovieStore& store, const BuildOptions& options) {
  return options.rank_universe == RankUniverse::Candidates
             ? filter_candidates(store, options.filter)
             : std::set<TitleKey>{};
}

Value money_value(const std::optional<Money>& m) {
  return m ? Value(static_cast<double>(m->amount)) : Value(Missing{});
}

}  // namespace

std::set<TitleKey> filter_candidates(const MovieStore& store, const FilterConfig& filter) {
  std::set<TitleKey> out;
  for (const auto& [key, movie] : store.movies()) {
    if (movie.kind != MovieKind::Movie || !key.year) continue;
    if (*key.year <= filter.year_after || *key.year >= filter.year_before) continue;
    const RatingRecord* rating = store.find_rating(key);
    if (rating == nullptr || rating->votes < filter.min_votes) continue;
    if (!contains(store.attribute_values(key, AttributeKind::Language), filter.language)) continue;
    if (!contains(store.attribute_values(key, AttributeKind::Country), filter.country)) continue;
    out.insert(key);
  }
  return out;
}

PersonRanks person_ranks(const MovieStore& store, CreditRole role,
                         const std::set<TitleKey>* universe) {
  PersonRanks ranks;
  // Credits are sorted by person, so sums accumulate in a fixed order.
  for (const auto& c : store.credits()) {
    if (c.role != role) continue;
    if (universe != nullptr && !universe->contains(c.key)) continue;
    const RatingRecord* rating = store.find_rating(c.key);
    if (rating == nullptr) continue;
    auto& entry = ranks[c.person];
    entry.person = c.person;
    entry.role = role;
    entry.rank += rating->rating.value();
    ++entry.support;
  }
  for (auto& [person, entry] : ranks) entry.rank /= static_cast<double>(entry.support);
  return ranks;
}

RankTables rank_tables(const MovieStore& store, const std::set<TitleKey>* universe) {
  return RankTables{person_ranks(store, CreditRole::Director, universe),
                    person_ranks(store, CreditRole::Actor, universe),
                    person_ranks(store, CreditRole::Actress, universe)};
}

MovieFeatures derive_features(const TitleKey& key, const MovieStore& store,
                              const RankTables& ranks) {
  MovieFeatures f;
  double director_sum = 0;
  std::size_t directors = 0;
  for (const CreditRecord* c : store.credits_for(key, CreditRole::Director)) {
    if (auto it = ranks.directors.find(c->person); it != ranks.directors.end()) {
      director_sum += it->second.rank;
      ++directors;
    }
  }
  if (directors > 0) f.director_rank = director_sum / static_cast<double>(directors);
  f.male_cast_rank = cast_sum(store, key, CreditRole::Actor, ranks.actors);
  f.female_cast_rank = cast_sum(store, key, CreditRole::Actress, ranks.actresses);
  f.budget = first_usd_budget(store, key);
  return f;
}

Dataset balance_average(const Dataset& dataset, std::size_t cap) {
  auto title = dataset.column_index("title");
  auto votes = dataset.column_index("votes");
  auto rating = dataset.column_index("rating");
  if (!title || !votes || !rating) {
    throw ParameterError("balance_average needs title, votes and rating columns");
  }

  struct Candidate {
    double votes;
    std::string title;
    std::size_t index;
  };
  std::map<long long, std::vector<Candidate>> steps;
  const auto& instances = dataset.instances();
  std::vector<bool> keep(instances.size(), true);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    if (inst.label != PopularityClass::Average) continue;
    auto r = number_of(inst.values[*rating]);
    if (!r) continue;
    const auto* t = std::get_if<std::string>(&inst.values[*title]);
    steps[std::llround(*r * 10.0)].push_back(
        Candidate{number_of(inst.values[*votes]).value_or(0.0), t ? *t : std::string(), i});
  }
  for (auto& [step, group] : steps) {
    if (group.size() <= cap) continue;
    std::sort(group.begin(), group.end(), [](const Candidate& a, const Candidate& b) {
      if (a.votes != b.votes) return a.votes > b.votes;
      return std::tie(a.title, a.index) < std::tie(b.title, b.index);
    });
    for (std::size_t k = cap; k < group.size(); ++k) keep[group[k].index] = false;
  }

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (keep[i]) kept.push_back(i);
  }
  return dataset.subset(kept);
}

Dataset build_dataset1(const MovieStore& store, const BuildOptions& options) {
  Dataset dataset({{"id", Role::Identifier},
                   {"title", Role::Identifier},
                   {"year", Role::Feature},
                   {"language", Role::Excluded},
                   {"country", Role::Excluded},
                   {"budget", Role::Feature},
                   {"director_rank", Role::Feature},
                   {"male_cast_rank", Role::Feature},
                   {"female_cast_rank", Role::Feature},
                   {"votes", Role::Excluded},
                   {"rating", Role::Excluded}});
  const auto candidates = filter_candidates(store, options.filter);
  const auto universe = rank_universe(store, options);
  const RankTables ranks =
      rank_tables(store, options.rank_universe == RankUniverse::Candidates ? &universe : nullptr);

  for (const TitleKey& key : candidates) {
    MovieFeatures f = derive_features(key, store, ranks);
    if (!f.director_rank || !f.budget) continue;
    const RatingRecord& r = *store.find_rating(key);
    Instance inst;
    inst.values = {static_cast<double>(store.movie_id(key)),
                   key.str(),
                   static_cast<double>(*key.year),
                   options.filter.language,
                   options.filter.country,
                   money_value(f.budget),
                   *f.director_rank,
                   f.male_cast_rank,
                   f.female_cast_rank,
                   static_cast<double>(r.votes),
                   r.rating.value()};
    inst.label = assign_class(r.rating);
    dataset.add(std::move(inst));
  }
  return balance_average(dataset, options.per_step_cap);
}

Dataset build_dataset2(const MovieStore& store, const BuildOptions& options) {
  Dataset dataset({{"id", Role::Identifier},
                   {"title", Role::Identifier},
                   {"budget", Role::Feature},
                   {"domestic", Role::Feature},
                   {"foreign", Role::Feature},
                   {"worldwide", Role::Feature},
                   {"votes", Role::Excluded},
                   {"rating", Role::Excluded}});
  auto usd = [](const std::optional<Money>& m) { return m && m->currency == "USD"; };
  for (const TitleKey& key : filter_candidates(store, options.filter)) {
    const FinanceRecord* fin = store.find_finance(key);
    if (fin == nullptr || !usd(fin->budget) || !usd(fin->domestic) || !usd(fin->foreign) ||
        !usd(fin->worldwide)) {
      continue;
    }
    const RatingRecord& r = *store.find_rating(key);
    Instance inst;
    inst.values = {static_cast<double>(store.movie_id(key)),
                   key.str(),
                   money_value(fin->budget),
                   money_value(fin->domestic),
                   money_value(fin->foreign),
                   money_value(fin->worldwide),
                   static_cast<double>(r.votes),
                   r.rating.value()};
    inst.label = assign_class(r.rating);
    dataset.add(std::move(inst));
  }
  return dataset;
}

}  // namespace moviepop

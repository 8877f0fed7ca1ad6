#include "moviepop/store.hpp"

#include <algorithm>
#include <tuple>

namespace moviepop {

const MovieRecord* MovieStore::find_movie(const TitleKey& key) const {
  auto it = movies_.find(key);
  return it == movies_.end() ? nullptr : &it->second;
}

const RatingRecord* MovieStore::find_rating(const TitleKey& key) const {
  auto it = ratings_.find(key);
  return it == ratings_.end() ? nullptr : &it->second;
}

const FinanceRecord* MovieStore::find_finance(const TitleKey& key) const {
  auto it = finances_.find(key);
  return it == finances_.end() ? nullptr : &it->second;
}

std::vector<const CreditRecord*> MovieStore::credits_for(const TitleKey& key,
                                                         CreditRole role) const {
  std::vector<const CreditRecord*> out;
  auto it = credits_by_key_.find(key);
  if (it == credits_by_key_.end()) return out;
  for (std::size_t i : it->second) {
    if (credits_[i].role == role) out.push_back(&credits_[i]);
  }
  return out;
}

std::vector<std::string_view> MovieStore::attribute_values(const TitleKey& key,
                                                           AttributeKind kind) const {
  std::vector<std::string_view> out;
  auto it = attributes_by_key_.find(key);
  if (it == attributes_by_key_.end()) return out;
  for (std::size_t i : it->second) {
    if (attributes_[i].kind == kind) out.push_back(attributes_[i].value);
  }
  return out;
}

std::size_t MovieStore::movie_id(const TitleKey& key) const {
  auto it = ids_.find(key);
  return it == ids_.end() ? 0 : it->second;
}

bool MovieStore::operator==(const MovieStore& other) const {
  return movies_ == other.movies_ && ratings_ == other.ratings_ && credits_ == other.credits_ &&
         attributes_ == other.attributes_ && finances_ == other.finances_;
}

MovieStore build_store(ParsedTables tables) {
  MovieStore store;
  StoreCounts& counts = store.counts_;

  for (auto& m : tables.movies) {
    TitleKey key = m.key;
    if (!store.movies_.emplace(std::move(key), std::move(m)).second) ++counts.duplicate_movies;
  }
  auto known = [&](const TitleKey& key) { return store.movies_.contains(key); };

  for (auto& r : tables.ratings) {
    if (!known(r.key)) {
      ++counts.dangling_ratings;
      continue;
    }
    TitleKey key = r.key;
    if (!store.ratings_.emplace(std::move(key), std::move(r)).second) ++counts.duplicate_ratings;
  }

  auto credit_order = [](const CreditRecord& a, const CreditRecord& b) {
    return std::tie(a.person, a.role, a.key) < std::tie(b.person, b.role, b.key);
  };
  std::vector<CreditRecord> credits;
  credits.reserve(tables.credits.size());
  for (auto& c : tables.credits) {
    if (!known(c.key)) {
      ++counts.dangling_credits;
      continue;
    }
    credits.push_back(std::move(c));
  }
  std::stable_sort(credits.begin(), credits.end(), credit_order);
  auto last = std::unique(credits.begin(), credits.end());
  counts.duplicate_credits = static_cast<std::size_t>(credits.end() - last);
  credits.erase(last, credits.end());
  store.credits_ = std::move(credits);

  for (auto& a : tables.attributes) {
    if (!known(a.key)) {
      ++counts.dangling_attributes;
      continue;
    }
    store.attributes_.push_back(std::move(a));
  }

  for (auto& f : tables.finances) {
    if (!known(f.key)) {
      ++counts.dangling_finances;
      continue;
    }
    TitleKey key = f.key;
    if (!store.finances_.emplace(std::move(key), std::move(f)).second) {
      ++counts.duplicate_finances;
    }
  }

  for (std::size_t i = 0; i < store.credits_.size(); ++i) {
    store.credits_by_key_[store.credits_[i].key].push_back(i);
  }
  for (std::size_t i = 0; i < store.attributes_.size(); ++i) {
    store.attributes_by_key_[store.attributes_[i].key].push_back(i);
  }
  std::size_t id = 0;
  for (const auto& [key, movie] : store.movies_) store.ids_.emplace(key, ++id);
  return store;
}

}  // namespace moviepop

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "moviepop/store.hpp"

namespace moviepop {
namespace {

TitleKey key(const char* text) { return *parse_title_key(text); }

ParsedTables small_tables() {
  ParsedTables t;
  t.movies = {{key("Alpha (2003)"), MovieKind::Movie}, {key("Beta (2004)"), MovieKind::Movie},
              {key("Alpha (2003)"), MovieKind::Video}};
  t.ratings = {{key("Alpha (2003)"), 1500, *Rating::from_tenths(75)},
               {key("Ghost (2001)"), 10, *Rating::from_tenths(50)}};
  t.credits = {{"Doe, Jane", CreditRole::Director, key("Beta (2004)")},
               {"Doe, Jane", CreditRole::Director, key("Alpha (2003)")},
               {"Doe, Jane", CreditRole::Director, key("Alpha (2003)")},
               {"Roe, Rick", CreditRole::Actor, key("Ghost (2001)")}};
  t.attributes = {{key("Alpha (2003)"), AttributeKind::Country, "USA"},
                  {key("Alpha (2003)"), AttributeKind::Country, "Canada"},
                  {key("Alpha (2003)"), AttributeKind::BudgetLine, "USD 1,000"}};
  FinanceRecord f;
  f.key = key("Beta (2004)");
  f.budget = Money{100, "USD"};
  t.finances = {f};
  return t;
}

TEST(MovieStore, LinksAndDropsDanglingRecords) {
  MovieStore s = build_store(small_tables());
  EXPECT_EQ(s.movies().size(), 2u);
  EXPECT_EQ(s.find_movie(key("Alpha (2003)"))->kind, MovieKind::Movie);  // first wins
  EXPECT_EQ(s.ratings().size(), 1u);
  EXPECT_EQ(s.credits().size(), 2u);
  EXPECT_EQ(s.counts().duplicate_movies, 1u);
  EXPECT_EQ(s.counts().duplicate_credits, 1u);
  EXPECT_EQ(s.counts().dangling_ratings, 1u);
  EXPECT_EQ(s.counts().dangling_credits, 1u);
  EXPECT_EQ(s.find_rating(key("Ghost (2001)")), nullptr);
}

TEST(MovieStore, EveryRecordResolvesToAMovie) {
  MovieStore s = build_store(small_tables());
  for (const auto& [k, r] : s.ratings()) EXPECT_NE(s.find_movie(k), nullptr);
  for (const auto& c : s.credits()) EXPECT_NE(s.find_movie(c.key), nullptr);
  for (const auto& a : s.attributes()) EXPECT_NE(s.find_movie(a.key), nullptr);
  for (const auto& [k, f] : s.finances()) EXPECT_NE(s.find_movie(k), nullptr);
}

TEST(MovieStore, AttributeValuesKeepSourceOrder) {
  MovieStore s = build_store(small_tables());
  auto v = s.attribute_values(key("Alpha (2003)"), AttributeKind::Country);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], "USA");
  EXPECT_EQ(v[1], "Canada");
}

TEST(MovieStore, IdsFollowKeyOrder) {
  MovieStore s = build_store(small_tables());
  EXPECT_EQ(s.movie_id(key("Alpha (2003)")), 1u);
  EXPECT_EQ(s.movie_id(key("Beta (2004)")), 2u);
  EXPECT_EQ(s.movie_id(key("Ghost (2001)")), 0u);
}

TEST(StoreIo, SaveLoadRoundTripAndByteStable) {
  testing::TempDir a("store_a"), b("store_b");
  MovieStore s = build_store(small_tables());
  save_store(s, a.path());
  MovieStore loaded = load_store(a.path());
  EXPECT_EQ(loaded, s);
  save_store(loaded, b.path());
  for (const char* name :
       {"movies.tsv", "ratings.tsv", "credits.tsv", "attributes.tsv", "finances.tsv"}) {
    std::ifstream fa(a.path() / name), fb(b.path() / name);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    EXPECT_EQ(sa.str(), sb.str()) << name;
    EXPECT_FALSE(sa.str().empty()) << name;
  }
}

}  // namespace
}  // namespace moviepop

#include "doctest.h"

#include <filesystem>
#include <random>

#include "addcomb/chains.hpp"
#include "addcomb/dimension.hpp"
#include "addcomb/doubling.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/search.hpp"

using namespace addcomb;

TEST_CASE("normal-set enumeration") {
  CHECK(enumerate_normal_sets(3, 3) ==
        std::vector<NormalSet>{NormalSet{0, 1, 2}, NormalSet{0, 1, 3},
                               NormalSet{0, 2, 3}});
  CHECK(enumerate_normal_sets(4, 4) ==
        std::vector<NormalSet>{NormalSet{0, 1, 2, 3}, NormalSet{0, 1, 2, 4},
                               NormalSet{0, 1, 3, 4}, NormalSet{0, 2, 3, 4}});
  CHECK(enumerate_normal_sets(6, 5) == std::vector<NormalSet>{NormalSet{0, 1, 2, 3, 4, 5}});
  // {0,2,4} is dropped by the gcd filter.
  CHECK(enumerate_normal_sets(3, 4).size() == 5);
  CHECK_THROWS_AS(enumerate_normal_sets(2, 4), DomainError);
  CHECK_THROWS_AS(enumerate_normal_sets(4, 2), DomainError);
  CHECK(estimate_normal_set_count(8, 72) == 1473109704ULL);
  try {
    enumerate_normal_sets(8, 72);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(e.estimate() == 1473109704ULL);
  }
}

TEST_CASE("enumeration restarts from a cursor") {
  const auto all = enumerate_normal_sets(5, 11);
  for (std::size_t cut : {std::size_t{0}, std::size_t{1}, std::size_t{57}, all.size() - 1}) {
    NormalSetEnumerator en(5, 11);
    for (std::size_t i = 0; i < cut; ++i) REQUIRE(en.next());
    NormalSetEnumerator resumed(5, 11, en.cursor());
    std::vector<NormalSet> rest;
    while (auto s = resumed.next()) rest.push_back(*s);
    REQUIRE(rest.size() == all.size() - cut);
    CHECK(std::equal(rest.begin(), rest.end(), all.begin() + static_cast<long>(cut)));
  }
  NormalSetEnumerator done(4, 5);
  while (done.next()) {
  }
  NormalSetEnumerator after(4, 5, done.cursor());
  CHECK_FALSE(after.next());
  CHECK_THROWS_AS(NormalSetEnumerator(4, 5, EnumerationCursor{4, {3, 2}}), DomainError);
}

TEST_CASE("vol1 oracle values") {
  const auto r = vol1_oracle(5, 12, SearchOptions{.bound = 16});
  CHECK(r.observed_max_vol == 9);
  CHECK(r.mu == 8);
  CHECK(r.search_bound == 16);
  CHECK(r.violations.empty());
  CHECK(r.attained);
  const auto has = [&](const IntSet& s) {
    return std::binary_search(r.witnesses.begin(), r.witnesses.end(), canonical_form(s));
  };
  CHECK(has(IntSet{0, 1, 2, 4, 8}));
  CHECK(has(IntSet{0, 4, 6, 7, 8}));

  const auto r4 = vol1_oracle(4, 7, SearchOptions{.bound = 8});
  CHECK(r4.observed_max_vol == 4);
  CHECK(r4.witnesses == std::vector<NormalSet>{NormalSet{0, 1, 2, 3}});
  CHECK(vol1_oracle(5, 11, SearchOptions{.bound = 12}).observed_max_vol == 7);

  CHECK_THROWS_AS(vol1_oracle(5, 13), RangeError);
  CHECK_THROWS_AS(vol1_oracle(5, 12, SearchOptions{.bound = 7}), DomainError);
  CHECK_THROWS_AS(vol1_oracle(5, 12, SearchOptions{.bound = 200}), CapacityError);
  CHECK_THROWS_AS(vol1_oracle(8, 20, SearchOptions{.budget = 1000}), CapacityError);
}

// Max volume and number of canonical witnesses per legal T, from an
// independent brute-force script (naive sumsets, exact sympy rank).
TEST_CASE("conjecture tables for k = 4, 5, 6") {
  struct Row {
    int k;
    std::vector<Int> max_vol;
    std::vector<std::size_t> witnesses;
  };
  const std::vector<Row> rows = {
      {4, {4, 5}, {1, 1}},
      {5, {5, 6, 7, 9}, {1, 1, 3, 3}},
      {6, {6, 7, 8, 9, 11, 13, 17}, {1, 1, 3, 6, 6, 13, 12}},
  };
  for (const auto& row : rows) {
    const auto reports = verify_conjecture(row.k);
    REQUIRE(reports.size() == row.max_vol.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      CAPTURE(row.k);
      CAPTURE(reports[i].t);
      CHECK(reports[i].observed_max_vol == row.max_vol[i]);
      CHECK(reports[i].witnesses.size() == row.witnesses[i]);
      CHECK(reports[i].conjecture_holds());
      CHECK(reports[i].attained);
    }
  }
  CHECK_THROWS_AS(verify_conjecture(3), DomainError);
}

TEST_CASE("fast sweep agrees with plain enumeration") {
  for (int k = 4; k <= 6; ++k) {
    const auto reports = verify_conjecture(k);
    for (const auto& r : reports) {
      Int best = 0;
      std::vector<NormalSet> wit;
      for (const auto& a : enumerate_normal_sets(k, r.search_bound)) {
        if (doubling(a) != r.t || additive_dim(a) != 1) continue;
        const Int v = a.max() + 1;
        if (v > best) best = v, wit.clear();
        if (v == best) wit.push_back(canonical_form(a));
      }
      std::sort(wit.begin(), wit.end());
      wit.erase(std::unique(wit.begin(), wit.end()), wit.end());
      CAPTURE(k);
      CAPTURE(r.t);
      CHECK(r.observed_max_vol == best);
      CHECK(r.witnesses == wit);
    }
  }
}

TEST_CASE("sweep results do not depend on the thread count") {
  const auto a = verify_conjecture(6, SearchOptions{.threads = 1});
  const auto b = verify_conjecture(6, SearchOptions{.threads = 3});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].observed_max_vol == b[i].observed_max_vol);
    CHECK(a[i].witnesses == b[i].witnesses);
  }
}

TEST_CASE("1-extremality") {
  Vol1Table table;
  CHECK(is_1_extremal(IntSet{0, 1, 2, 4, 8}, table));
  CHECK(is_1_extremal(IntSet{0, 3, 4, 6, 7, 8}, table));
  // |2A| = 10 here, and 6 is the largest volume at (5, 10).
  CHECK(doubling(IntSet{0, 1, 2, 3, 5}) == 10);
  CHECK(is_1_extremal(IntSet{0, 1, 2, 3, 5}, table));
  CHECK_FALSE(is_1_extremal(IntSet{0, 1, 2, 4, 7}, table));
  CHECK(is_1_extremal(IntSet{10, 12, 14, 18, 26}, table));
  CHECK_THROWS_AS(is_1_extremal(IntSet{0, 1, 2, 5}, table), DomainError);
  CHECK(table.max_volume(5, 12) == 9);
  CHECK(is_1_extremal(IntSet{0, 1, 2}));
}

TEST_CASE("property: random one-dimensional sets never beat the table") {
  std::mt19937_64 rng(0xfeedULL);
  Vol1Table table;
  std::uniform_int_distribution<int> pick_k(4, 6);
  int checked = 0;
  for (int trial = 0; trial < 30000; ++trial) {
    const int k = pick_k(rng);
    std::uniform_int_distribution<Int> pick(1, 3 * k);
    std::vector<Int> e{0};
    while (static_cast<int>(e.size()) < k) {
      const Int x = pick(rng);
      if (std::find(e.begin(), e.end(), x) == e.end()) e.push_back(x);
    }
    const IntSet a(e);
    if (additive_dim(a) != 1) continue;
    ++checked;
    REQUIRE(volume_1d(a) <= table.max_volume(k, doubling(a)));
    REQUIRE(volume_1d(a) <= mu(k, doubling(a)) + 1);
  }
  CHECK(checked > 500);
}

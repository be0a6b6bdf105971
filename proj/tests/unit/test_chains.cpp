#include "doctest.h"

#include <algorithm>

#include "addcomb/chains.hpp"
#include "addcomb/doubling.hpp"
#include "addcomb/errors.hpp"

using namespace addcomb;

TEST_CASE("volume and canonical form") {
  CHECK(volume_1d(IntSet{3, 7, 11, 19}) == 5);
  CHECK(volume_1d(IntSet{2}) == 1);
  CHECK_THROWS_AS(volume_1d(IntSet{0, 1, 2, 5}), DomainError);
  CHECK(canonical_form(IntSet{0, 1, 2, 4, 8}) == NormalSet{0, 4, 6, 7, 8});
  CHECK(canonical_form(IntSet{0, 4, 6, 7, 8}) == NormalSet{0, 4, 6, 7, 8});
  CHECK(canonical_form(IntSet{10, 12, 14, 16, 22}) == NormalSet{0, 3, 4, 5, 6});
}

TEST_CASE("doubling cap") {
  CHECK(chain_doubling_cap(5) == 12);
  CHECK(chain_doubling_cap(5, ChainRules{true}) == 11);
}

TEST_CASE("chain extension") {
  CHECK(is_chain_extension(IntSet{0, 1, 2}, IntSet{0, 1, 2, 4}));
  CHECK(is_chain_extension(IntSet{0, 1, 2}, IntSet{0, 1, 2, 3}));
  CHECK(is_chain_extension(IntSet{0, 1, 2, 4}, IntSet{0, 1, 2, 4, 8}));
  CHECK_THROWS_AS(is_chain_extension(IntSet{0, 1, 2, 4}, IntSet{0, 1, 2, 4, 8},
                                     ChainRules{true}),
                  DomainError);
  // Ties the best competitor of doubling 11 ({0,1,2,4} plus one point
  // outside the hull reaches volume 7 at most).
  CHECK(is_chain_extension(IntSet{0, 1, 2, 4}, IntSet{0, 1, 2, 4, 6}));
  // Doubling 12 like {0,1,2,4,8}, which has the larger volume.
  CHECK_FALSE(is_chain_extension(IntSet{0, 1, 2, 4}, IntSet{0, 1, 2, 4, 7}));
  CHECK_THROWS_AS(is_chain_extension(IntSet{0, 1, 2, 4}, IntSet{0, 1, 2, 3, 4}),
                  DomainError);
}

TEST_CASE("chain recognition") {
  const auto cert = is_chain(IntSet{0, 4, 6, 7, 8});
  REQUIRE(cert);
  CHECK(cert->sets.size() == 3);
  CHECK(cert->top() == IntSet{0, 4, 6, 7, 8});
  CHECK(cert->volume == 9);
  CHECK_FALSE(is_chain(IntSet{0, 3, 4, 6, 7, 8}));
  CHECK(is_chain(IntSet{0, 1, 2}));
  // Translates and dilates are recognized as well.
  CHECK(is_chain(IntSet{5, 7, 9, 11, 13}));
}

TEST_CASE("chain enumeration for k = 5 matches the independent oracle") {
  const auto chains = enumerate_chains(5);
  std::vector<NormalSet> sets;
  std::vector<Int> ts;
  for (const auto& c : chains) {
    sets.push_back(c.set);
    ts.push_back(c.profile.t);
    CHECK(c.volume == c.set.max() + 1);
  }
  CHECK(sets == std::vector<NormalSet>{
                    NormalSet{0, 1, 2, 3, 4}, NormalSet{0, 2, 3, 4, 5},
                    NormalSet{0, 2, 3, 4, 6}, NormalSet{0, 2, 4, 5, 6},
                    NormalSet{0, 3, 4, 5, 6}, NormalSet{0, 4, 5, 6, 8},
                    NormalSet{0, 4, 6, 7, 8}});
  CHECK(ts == std::vector<Int>{9, 10, 11, 11, 11, 12, 12});
}

TEST_CASE("chain counts for k = 6") {
  // 29 canonical chains, two of them with volume mu rather than mu + 1,
  // both at T = 15.
  const auto chains = enumerate_chains(6);
  CHECK(chains.size() == 29);
  std::vector<NormalSet> short_ones;
  for (const auto& c : chains)
    if (c.volume != c.profile.mu + 1) short_ones.push_back(c.set);
  CHECK(short_ones == std::vector<NormalSet>{NormalSet{0, 3, 4, 5, 6, 9},
                                             NormalSet{0, 3, 6, 7, 8, 9}});
}

TEST_CASE("enumeration is deterministic across thread counts") {
  ChainEnumOptions one;
  one.threads = 1;
  ChainEnumOptions many;
  many.threads = 4;
  const auto a = enumerate_chains(6, one);
  const auto b = enumerate_chains(6, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].set == b[i].set);
}

TEST_CASE("main theorem report on a passing chain") {
  const auto cert = is_chain(IntSet{0, 4, 5, 6, 8});
  REQUIRE(cert);
  const auto rep = verify_main_theorem(*cert);
  CHECK(rep.volume_ok);
  CHECK(rep.base_ok);
  CHECK(rep.replay_ok);
  CHECK(rep.pass());
}

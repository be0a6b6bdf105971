#include "doctest.h"

#include <map>

#include "addcomb/errors.hpp"
#include "addcomb/lemmas.hpp"

using namespace addcomb;

TEST_CASE("extension quantities") {
  const auto a = check_extension_lemmas(IntSet{0, 1, 2}, 4);
  CHECK(a.delta_t == 3);
  CHECK(a.overlap == 1);
  CHECK(a.t_x == 8);
  CHECK(a.ok());
  const auto b = check_extension_lemmas(IntSet{0, 1, 2}, 3);
  CHECK(b.delta_t == 2);
  CHECK(b.ok());
  // x = 5 only fills 9 and 10.
  CHECK(check_extension_lemmas(IntSet{0, 2, 3, 4}, 5).delta_t == 2);
  const auto c = check_extension_lemmas(IntSet{0, 2, 3, 4}, 8);
  CHECK(c.delta_t == 4);
  CHECK(c.t == 8);
  CHECK(c.t_x == 12);
  CHECK(c.c_before == 2);
  CHECK(c.c_after == 3);
  CHECK(c.crossing);
  CHECK(c.ok());
  CHECK_THROWS_AS(check_extension_lemmas(IntSet{0, 1, 2}, 5), DomainError);
  CHECK_THROWS_AS(check_extension_lemmas(IntSet{0, 2, 4}, 6), DomainError);
}

TEST_CASE("extension sweep, k = 4 and 5") {
  Vol1Table table;
  const auto s4 = sweep_extension_lemmas(4, 0, &table);
  CHECK(s4.failures.empty());
  CHECK(s4.sets > 0);
  const auto s5 = sweep_extension_lemmas(5, 0, &table);
  CHECK(s5.failures.empty());
  CHECK(s5.sets == 20);
  CHECK(s5.extensions == 122);
}

TEST_CASE("uniqueness statements") {
  Vol1Table table;
  const auto odd = check_uniqueness_lemmas(NormalSet{0, 4, 5, 6, 8}, table);
  bool saw = false;
  for (const auto& l : odd.checked) {
    if (l.lemma == "single-odd-element") {
      saw = true;
      CHECK(l.pass);
    }
  }
  CHECK(saw);

  const auto dbl = check_uniqueness_lemmas(NormalSet{0, 1, 2, 4}, table);
  std::map<std::string, bool> verdict;
  for (const auto& l : dbl.checked) verdict[l.lemma] = l.pass;
  REQUIRE(verdict.count("double-right-extension"));
  CHECK(verdict["double-right-extension"]);
  // The odd element 1 already lies in the halved set {0,1,2}.
  REQUIRE(verdict.count("single-odd-element"));
  CHECK_FALSE(verdict["single-odd-element"]);

  // Its only odd element is 3 and halving the rest gives {0,1,2,3}, which
  // already holds 3, so no D_x preimage exists.
  const auto bad = check_uniqueness_lemmas(NormalSet{0, 2, 3, 4, 6}, table);
  CHECK_FALSE(bad.pass());
}

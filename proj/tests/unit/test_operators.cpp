#include "doctest.h"

#include "addcomb/chains.hpp"
#include "addcomb/doubling.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/operators.hpp"

using namespace addcomb;

TEST_CASE("D and D_x") {
  CHECK(op_D(NormalSet{0, 1, 2}) == NormalSet{0, 1, 2, 4});
  CHECK(op_D(op_D(NormalSet{0, 1, 2})) == NormalSet{0, 1, 2, 4, 8});
  CHECK(op_Dx(NormalSet{0, 2, 3, 4}, 5) == NormalSet{0, 4, 5, 6, 8});
  CHECK(op_Dx(NormalSet{0, 1, 2}, 3) == NormalSet{0, 2, 3, 4});
  CHECK_THROWS_AS(op_Dx(NormalSet{0, 1, 2}, 4), DomainError);  // even
  CHECK_THROWS_AS(op_Dx(NormalSet{0, 1, 2}, 1), DomainError);  // in A
  CHECK_THROWS_AS(op_Dx(NormalSet{0, 1, 2}, 7), DomainError);  // not in 2A
  CHECK_THROWS_AS(op_D(NormalSet{0}), DomainError);
}

TEST_CASE("D and D_x grow doubling by k and double mu") {
  for (const NormalSet& a :
       {NormalSet{0, 1, 2, 3}, NormalSet{0, 2, 3, 4}, NormalSet{0, 2, 3, 4, 6},
        NormalSet{0, 4, 6, 7, 8}}) {
    const int k = a.k();
    const Int t = doubling(a);
    const NormalSet d = op_D(a);
    CHECK(doubling(d) == t + k);
    CHECK(d.max() == 2 * a.max());
    const IntSet two_a = sumset(a, a);
    for (Int x : two_a.elements()) {
      if (x % 2 == 0 || a.set().contains(x)) continue;
      const NormalSet dx = op_Dx(a, x);
      CHECK(doubling(dx) == t + k);
      CHECK(dx.max() == 2 * a.max());
    }
  }
}

TEST_CASE("phi variants") {
  CHECK(variant_name(PhiVariant::DilateAdjoinOdd) ==
        variant_name(parse_variant(variant_name(PhiVariant::DilateAdjoinOdd))));
  CHECK_THROWS_AS(parse_variant("sideways"), DomainError);
  CHECK(phi_apply({PhiVariant::ExtendRight, std::nullopt}, IntSet{0, 1, 2, 4}) ==
        NormalSet{0, 1, 2, 4, 8});
  CHECK(phi_apply({PhiVariant::ExtendRightOfReflexion, std::nullopt},
                  IntSet{0, 1, 2, 4}) == NormalSet{0, 2, 3, 4, 8});
  CHECK(phi_apply({PhiVariant::DilateAdjoinOdd, 5}, IntSet{0, 2, 3, 4}) ==
        NormalSet{0, 4, 5, 6, 8});
  CHECK(phi_apply({PhiVariant::DilateAdjoinOddOfReflexion, 5}, IntSet{0, 1, 2, 4}) ==
        NormalSet{0, 4, 5, 6, 8});
  // The reflexion {0,2,3,4} already holds 3.
  CHECK_THROWS_AS(phi_apply({PhiVariant::DilateAdjoinOddOfReflexion, 3}, IntSet{0, 1, 2, 4}),
                  DomainError);
  CHECK_THROWS_AS(phi_apply({PhiVariant::DilateAdjoinOdd, std::nullopt}, IntSet{0, 1, 2}),
                  DomainError);
  // Non-normal operands are normalized first.
  CHECK(phi_apply({PhiVariant::ExtendRight, std::nullopt}, IntSet{10, 12, 14}) ==
        NormalSet{0, 1, 2, 4});
}

TEST_CASE("phi_invert") {
  const auto pre = phi_invert(NormalSet{0, 4, 5, 6, 8});
  bool found = false;
  for (const auto& p : pre) {
    CHECK(phi_apply(p.step, p.preimage) == NormalSet{0, 4, 5, 6, 8});
    if (p.step.variant == PhiVariant::DilateAdjoinOdd && p.step.x == 5)
      found = p.preimage == NormalSet{0, 2, 3, 4};
  }
  CHECK(found);
}

TEST_CASE("factorize") {
  const auto f = factorize(NormalSet{0, 1, 2, 4, 8});
  CHECK(f.base == NormalSet{0, 1, 2, 4});
  REQUIRE(f.steps.size() == 1);
  CHECK(f.steps[0].variant == PhiVariant::ExtendRight);
  CHECK(replay(f) == NormalSet{0, 1, 2, 4, 8});

  const auto g = factorize(NormalSet{0, 1, 2, 3});
  CHECK(g.steps.empty());
  CHECK(g.base == NormalSet{0, 1, 2, 3});
}

TEST_CASE("max volume construction") {
  CHECK(max_volume_construction(5, 12) == op_D(max_volume_construction(4, 8)));
  CHECK(max_volume_construction(5, 11) == NormalSet{0, 3, 4, 5, 6});
  for (int k = 3; k <= 9; ++k) {
    for (Int t = min_doubling(k); t <= max_doubling(k); ++t) {
      const NormalSet a = max_volume_construction(k, t);
      REQUIRE(a.k() == k);
      REQUIRE(doubling(a) == t);
      REQUIRE(a.max() == mu(k, t));
      REQUIRE(volume_1d(a) == mu(k, t) + 1);
    }
  }
  CHECK_THROWS_AS(max_volume_construction(5, 13), RangeError);
}

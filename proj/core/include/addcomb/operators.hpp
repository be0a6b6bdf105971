#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "addcomb/int_set.hpp"

namespace addcomb {

/// D(A) = A ∪ {2 max A}. Requires |A| >= 2.
NormalSet op_D(const NormalSet& a);

/// D_x(A) = 2·A ∪ {x} for odd x in 2A \ A. Throws DomainError otherwise.
NormalSet op_Dx(const NormalSet& a, Int x);

/// The four ways a member of the growth family acts on the normal form X~
/// of its operand.
enum class PhiVariant {
  ExtendRight,                 // X~ ∪ {2 max X~}
  ExtendRightOfReflexion,      // (X~)^- ∪ {2 max X~}
  DilateAdjoinOdd,             // 2·X~ ∪ {x}
  DilateAdjoinOddOfReflexion,  // 2·(X~)^- ∪ {x}
};

std::string_view variant_name(PhiVariant v) noexcept;
/// Inverse of variant_name; throws DomainError on unknown names.
PhiVariant parse_variant(std::string_view name);

struct PhiStep {
  PhiVariant variant = PhiVariant::ExtendRight;
  /// Odd adjoined element; present exactly for the dilate variants.
  std::optional<Int> x;

  friend bool operator==(const PhiStep&, const PhiStep&) = default;
};

/// Normalizes X, reflects when the variant asks for it, then applies D or
/// D_x. Throws DomainError when step.x is missing or invalid.
NormalSet phi_apply(const PhiStep& step, const IntSet& x);

struct PhiPreimage {
  PhiStep step;
  NormalSet preimage;
};

/// Every (step, X) with phi_apply(step, X) = Y and X normal, in the order
/// ExtendRight, ExtendRightOfReflexion, DilateAdjoinOdd,
/// DilateAdjoinOddOfReflexion. Requires |Y| >= 4.
std::vector<PhiPreimage> phi_invert(const NormalSet& y);

/// Y = phi_s ... phi_1(base), steps listed in application order.
struct Factorization {
  NormalSet base;
  std::vector<PhiStep> steps;
  /// The base itself exceeds 3|B'| - 4 but drops to it after removing one
  /// extreme element; `core` holds that smaller set.
  bool b_prime_case = false;
  std::optional<NormalSet> core;
};

/// Peels growth steps off a chain until the current set has doubling at
/// most 3|X| - 4. Search is depth-first with the preference order of
/// phi_invert, so the first factorization found is deterministic.
/// Throws FactorizationFailed when no branch reaches such a base.
Factorization factorize(const NormalSet& a);

/// Applies the steps of `f` to its base.
NormalSet replay(const Factorization& f);

/// A normal one-dimensional set with k elements, doubling t and maximum
/// mu(k, t): the segment-with-gap seed {0} ∪ [b+1, k+b-1] for t <= 3k-4,
/// then iterated D. Requires a legal (k, t).
NormalSet max_volume_construction(int k, Int t);

}  // namespace addcomb

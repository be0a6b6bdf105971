#pragma once

#include "addcomb/int_set.hpp"

namespace addcomb {

/// Position of a doubling value T = |2A| for |A| = k in the parametrization
///
///   T = c k - C(c+1, 2) + b + 2,   2 <= c <= k-2,  1 <= b <= k-c-1,
///
/// extended by (c, b) = (2, 0) for T = 2k - 1. `mu` is 2^(c-2) (k-c+b+1),
/// the largest normal-form maximum expected for that (k, T).
struct DoublingProfile {
  int k = 0;
  Int t = 0;
  int c = 0;
  int b = 0;
  Int mu = 0;

  friend bool operator==(const DoublingProfile&,
                         const DoublingProfile&) = default;
};

/// 2k - 1
constexpr Int min_doubling(int k) { return 2 * Int{k} - 1; }
/// k(k-1)/2 + 2
constexpr Int max_doubling(int k) { return Int{k} * (k - 1) / 2 + 2; }

/// True when (k, t) lies in the parametrized range. k = 3 admits only t = 5.
bool is_legal_doubling(int k, Int t) noexcept;

/// Throws RangeError naming [2k-1, k(k-1)/2+2] when t is outside it.
DoublingProfile profile(int k, Int t);

/// Inverse of profile. Throws DomainError for (c, b) outside the legal
/// region.
Int doubling_from_profile(int k, int c, int b);

Int mu(int k, Int t);

}  // namespace addcomb

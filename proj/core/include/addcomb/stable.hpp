#pragma once

#include <optional>
#include <vector>

#include "addcomb/int_set.hpp"

namespace addcomb {

// The predicates below take sets with min 0. The gcd is not required to be
// 1: the parts of a decomposition (e.g. {0,2}) are generally not normal.

/// 2A ∩ [0, max A] = A and neither 1 nor max A - 1 in A; {0} is stable.
bool is_stable(const IntSet& a);
/// The reflexion of A is stable.
bool is_right_stable(const IntSet& a);

struct DensityReport {
  /// |A ∩ [0, x]| <= ceil((x + 1) / 2) for every x in [0, max A].
  bool bound_holds = false;
  /// |A| = ceil((max A + 1) / 2).
  bool dense = false;
};

/// Requires A stable (DomainError otherwise).
DensityReport density_bound_check(const IntSet& a);

/// A = A1 o [0, p_len - 1] o A2 with A1 stable and A2 right-stable.
struct StableDecomposition {
  IntSet a1;
  Int p_len;
  IntSet a2;

  Int a1_max() const noexcept { return a1.max(); }
  Int a2_max() const noexcept { return a2.max(); }
  IntSet reassemble() const;

  friend bool operator==(const StableDecomposition&,
                         const StableDecomposition&) = default;
};

/// Every split of A (min 0) into stable prefix, segment, right-stable suffix.
std::vector<StableDecomposition> stable_splits(const IntSet& a);

/// The unique stable decomposition of a normal set with |2A| <= 3|A| - 4.
/// Throws NotDecomposable when no split exists and AmbiguousDecomposition
/// when several do.
StableDecomposition stable_decompose(const NormalSet& a);

/// When 2A = A1 o P' o A2 for the parts of `d`, returns |P'|.
std::optional<Int> doubled_segment_length(const IntSet& a,
                                          const StableDecomposition& d);

}  // namespace addcomb

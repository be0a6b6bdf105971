#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "addcomb/int_set.hpp"

namespace addcomb {

/// Indices into the increasing element list with a_i + a_j = a_r + a_s,
/// i <= j, r <= s, (i, j) < (r, s).
struct Quadruple {
  int i, j, r, s;
};

/// All additive quadruples of a set and the rank of the span of their
/// vectors e_i + e_j - e_r - e_s over the rationals.
struct RelationBasis {
  int k = 0;
  std::vector<Quadruple> relations;
  int rank = 0;
};

/// Requires |A| >= 2.
RelationBasis relation_rank(const IntSet& a);

/// Rank only, using one spanning relation per coincident pair instead of
/// every quadruple. Elements must be strictly increasing, 2 <= size <= 64.
int relation_rank_value(std::span<const Int> sorted);

/// k - 1 - rank. Requires |A| >= 2.
int additive_dim(const IntSet& a);

/// (2A - A) ∩ (max A, +inf) for a one-dimensional normal set A: the x > max A
/// keeping A ∪ {x} one-dimensional. Throws DomainError otherwise.
IntSet extension_candidates(const IntSet& a);

/// Largest |A| accepted by f_isomorphic.
inline constexpr std::size_t kIsomorphismCap = 10;

/// A bijection A -> B, as (a, image) pairs in increasing order of a.
using FreimanMap = std::vector<std::pair<Int, Int>>;

/// Searches for a bijection preserving x + y = z + t in both directions.
/// Throws CapacityError above kIsomorphismCap elements.
std::optional<FreimanMap> f_isomorphic(const IntSet& a, const IntSet& b);

}  // namespace addcomb

#include "addcomb/stable.hpp"

#include <string>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

void require_min_zero(const IntSet& a, const char* op) {
  if (a.min() != 0) {
    throw DomainError(std::string(op) + " requires min 0, got " + a.str());
  }
}

bool stable_unchecked(const IntSet& a) {
  if (a.size() == 1) return true;
  const Int top = a.max();
  if (a.contains(1) || a.contains(top - 1)) return false;
  // 2A ∩ [0, top] = A; A ⊆ 2A always since 0 ∈ A.
  std::size_t below = 0;
  const IntSet two_a = sumset(a, a);
  for (Int e : two_a.elements()) {
    if (e > top) break;
    ++below;
  }
  return below == a.size();
}

}  // namespace

bool is_stable(const IntSet& a) {
  require_min_zero(a, "stability");
  return stable_unchecked(a);
}

bool is_right_stable(const IntSet& a) {
  require_min_zero(a, "right stability");
  return stable_unchecked(reflexion(a));
}

DensityReport density_bound_check(const IntSet& a) {
  if (!is_stable(a)) {
    throw DomainError("density bound applies to stable sets, got " + a.str());
  }
  DensityReport out;
  out.bound_holds = true;
  Int count = 0;
  std::size_t idx = 0;
  for (Int x = 0; x <= a.max(); ++x) {
    if (idx < a.size() && a[idx] == x) {
      ++count;
      ++idx;
    }
    if (count > (x + 2) / 2) out.bound_holds = false;
  }
  out.dense = static_cast<Int>(a.size()) == (a.max() + 2) / 2;
  return out;
}

IntSet StableDecomposition::reassemble() const {
  std::vector<Int> seg;
  for (Int i = 0; i < p_len; ++i) seg.push_back(i);
  return concat(concat(a1, make_sorted_set(std::move(seg))), a2);
}

std::vector<StableDecomposition> stable_splits(const IntSet& a) {
  require_min_zero(a, "stable decomposition");
  std::vector<StableDecomposition> out;
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Int> first(a.elements().begin(), a.elements().begin() + i + 1);
    IntSet a1 = make_sorted_set(std::move(first));
    if (!stable_unchecked(a1)) continue;
    for (std::size_t j = i; j < k; ++j) {
      if (a[j] - a[i] != static_cast<Int>(j - i)) break;
      std::vector<Int> last;
      for (std::size_t t = j; t < k; ++t) last.push_back(a[t] - a[j]);
      IntSet a2 = make_sorted_set(std::move(last));
      if (!stable_unchecked(reflexion(a2))) continue;
      out.push_back({a1, static_cast<Int>(j - i + 1), std::move(a2)});
    }
  }
  return out;
}

StableDecomposition stable_decompose(const NormalSet& a) {
  const Int k = a.k();
  if (doubling(a) > 3 * k - 4) {
    throw DomainError("stable decomposition requires |2A| <= 3|A| - 4, got " +
                      a.str());
  }
  auto splits = stable_splits(a);
  if (splits.empty()) {
    throw NotDecomposable(a.str() + " has no stable decomposition");
  }
  if (splits.size() > 1) {
    throw AmbiguousDecomposition(a.str() + " has " +
                                 std::to_string(splits.size()) +
                                 " stable decompositions");
  }
  return std::move(splits.front());
}

std::optional<Int> doubled_segment_length(const IntSet& a,
                                          const StableDecomposition& d) {
  require_min_zero(a, "doubled segment");
  const Int top = 2 * a.max();
  const Int seg_lo = d.a1_max();
  const Int seg_hi = top - d.a2_max();
  if (seg_hi < seg_lo) return std::nullopt;
  std::vector<Int> expect(d.a1.elements().begin(), d.a1.elements().end());
  for (Int x = seg_lo + 1; x <= seg_hi; ++x) expect.push_back(x);
  for (std::size_t t = 1; t < d.a2.size(); ++t) expect.push_back(seg_hi + d.a2[t]);
  if (sumset(a, a).vec() != expect) return std::nullopt;
  return seg_hi - seg_lo + 1;
}

}  // namespace addcomb

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "addcomb/int_set.hpp"

namespace addcomb::detail {

// Sums of elements <= 127 fit in 255 bits.
struct SumMask {
  std::array<std::uint64_t, 4> w{};

  void set(Int bit) { w[bit >> 6] |= std::uint64_t{1} << (bit & 63); }

  // this |= (lo, hi) << shift, for a 128-bit operand.
  void or_shifted(std::uint64_t lo, std::uint64_t hi, Int shift) {
    const int word = static_cast<int>(shift >> 6);
    const int bits = static_cast<int>(shift & 63);
    const std::uint64_t src[2] = {lo, hi};
    for (int i = 0; i < 2; ++i) {
      if (word + i < 4) w[word + i] |= src[i] << bits;
      if (bits != 0 && word + i + 1 < 4) w[word + i + 1] |= src[i] >> (64 - bits);
    }
  }

  int count() const {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
           std::popcount(w[3]);
  }
};

// Depth-first walk over the normal sets {0 < a_1 < ... < a_{k-2} < m} whose
// doubling stays at most t_cap. Calls leaf(span of k sorted elements, T).
template <class Leaf>
class PartitionWalker {
 public:
  PartitionWalker(int k, Int m, Int t_cap, Leaf& leaf)
      : k_(k), m_(m), t_cap_(t_cap), leaf_(leaf) {}

  void run() {
    elems_[0] = 0;
    elems_[k_ - 1] = m_;
    std::uint64_t lo = 1, hi = 0;
    if (m_ < 64) lo |= std::uint64_t{1} << m_;
    else hi |= std::uint64_t{1} << (m_ - 64);
    SumMask s;
    s.set(0);
    s.set(m_);
    s.set(2 * m_);
    if (s.count() > t_cap_) return;
    walk(1, 1, lo, hi, s, m_);
  }

 private:
  void walk(int depth, Int start, std::uint64_t lo, std::uint64_t hi,
            const SumMask& s, Int g) {
    if (depth == k_ - 1) {
      if (g == 1) leaf_(std::span<const Int>(elems_.data(), k_), Int{s.count()});
      return;
    }
    const Int last = m_ - (k_ - 1 - depth);
    for (Int e = start; e <= last; ++e) {
      SumMask next = s;
      next.or_shifted(lo, hi, e);
      next.set(2 * e);
      if (next.count() > t_cap_) continue;
      elems_[depth] = e;
      std::uint64_t nlo = lo, nhi = hi;
      if (e < 64) nlo |= std::uint64_t{1} << e;
      else nhi |= std::uint64_t{1} << (e - 64);
      walk(depth + 1, e + 1, nlo, nhi, next, std::gcd(g, e));
    }
  }

  int k_;
  Int m_;
  Int t_cap_;
  Leaf& leaf_;
  std::array<Int, 128> elems_{};
};

template <class Leaf>
void walk_partition(int k, Int m, Int t_cap, Leaf& leaf) {
  PartitionWalker<Leaf>(k, m, t_cap, leaf).run();
}

// Per-doubling outcome of one sweep over max elements, indexed by t - t_min.
struct Vol1Sweep {
  int k = 0;
  Int t_min = 0;
  /// Largest max element of a one-dimensional set found, -1 if none.
  std::vector<Int> best_max;
  /// Canonical forms at best_max, sorted.
  std::vector<std::vector<NormalSet>> witnesses;
  /// Canonical forms with max above mu, sorted.
  std::vector<std::vector<NormalSet>> violations;
};

// bound_by_t[t - t_min] is the largest max element swept for t, or -1 to
// skip t. Bounds above kSweepMaxElement are rejected by the caller.
Vol1Sweep run_vol1_sweep(int k, const std::vector<Int>& bound_by_t,
                         unsigned threads);

}  // namespace addcomb::detail

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "addcomb/chains.hpp"
#include "addcomb/doubling.hpp"
#include "addcomb/int_set.hpp"

namespace addcomb {

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

/// Largest maximum element the exhaustive sweeps handle.
inline constexpr Int kSweepMaxElement = 127;

/// Resume point of a normal-set enumeration: the next set to be produced is
/// {0} ∪ interior ∪ {max_elem}.
struct EnumerationCursor {
  Int max_elem = 0;
  std::vector<Int> interior;

  friend bool operator==(const EnumerationCursor&,
                         const EnumerationCursor&) = default;
};

/// Number of sets {0 < ... < m}, m <= max_elem, before the gcd filter
/// (saturating at UINT64_MAX).
std::uint64_t estimate_normal_set_count(int k, Int max_elem);

/// All normal sets {0 = a_0 < ... < a_{k-1} = m} with m <= max_elem, by m
/// then lexicographically.
class NormalSetEnumerator {
 public:
  /// Throws DomainError unless k >= 3 and max_elem >= k - 1, and
  /// CapacityError when the estimated count exceeds `budget`.
  NormalSetEnumerator(int k, Int max_elem,
                      std::uint64_t budget = kDefaultSearchBudget);
  NormalSetEnumerator(int k, Int max_elem, EnumerationCursor from,
                      std::uint64_t budget = kDefaultSearchBudget);

  std::optional<NormalSet> next();
  /// Where a fresh enumerator would resume to produce the same remainder.
  EnumerationCursor cursor() const;

 private:
  bool advance();
  void skip_to_valid();

  int k_;
  Int max_elem_;
  Int m_;
  std::vector<Int> interior_;
  bool done_ = false;
};

std::vector<NormalSet> enumerate_normal_sets(
    int k, Int max_elem, std::uint64_t budget = kDefaultSearchBudget);

struct SearchOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  /// Largest normal-form maximum swept; default mu(k, T) + k per T.
  std::optional<Int> bound;
  std::uint64_t budget = kDefaultSearchBudget;
  bool force = false;
  /// Directory for cached reports; empty disables caching.
  std::string cache_dir;
};

/// Maximum volume among one-dimensional sets with |A| = k and |2A| = T,
/// restricted to normal forms with max <= search_bound. Sets of dimension
/// two or more are not examined.
struct SearchReport {
  int k = 0;
  Int t = 0;
  int c = 0;
  int b = 0;
  Int mu = 0;
  Int search_bound = 0;
  /// 0 when no one-dimensional set was found under the bound.
  Int observed_max_vol = 0;
  /// Canonical forms attaining observed_max_vol, sorted.
  std::vector<NormalSet> witnesses;
  /// Canonical one-dimensional sets with volume above mu + 1, sorted.
  std::vector<NormalSet> violations;
  /// The iterated-D construction is among the witnesses.
  bool attained = false;
  double elapsed_seconds = 0;

  bool conjecture_holds() const noexcept {
    return violations.empty() && observed_max_vol == mu + 1;
  }
};

/// mu(k, t) + k
Int default_search_bound(int k, Int t);

/// Single (k, t) sweep. Throws CapacityError over budget unless forced.
SearchReport vol1_oracle(int k, Int t, const SearchOptions& options = {});

/// One report per legal t, from a single sweep over all doublings.
std::vector<SearchReport> verify_conjecture(int k,
                                            const SearchOptions& options = {});

/// Lazily computed per-k tables of vol1 reports with default bounds.
/// Thread-safe.
class Vol1Table {
 public:
  explicit Vol1Table(SearchOptions options = {}) : options_(std::move(options)) {}

  const SearchReport& report(int k, Int t);
  const std::vector<SearchReport>& reports(int k);
  Int max_volume(int k, Int t) { return report(k, t).observed_max_vol; }

 private:
  SearchOptions options_;
  std::mutex mutex_;
  std::map<int, std::vector<SearchReport>> tables_;
};

/// volume_1d(A) equals the largest one-dimensional volume for (|A|, |2A|).
/// Throws DomainError for sets that are not one-dimensional and
/// CounterexampleError when A beats every set under the search bound.
bool is_1_extremal(const IntSet& a, Vol1Table& table);
bool is_1_extremal(const IntSet& a);

}  // namespace addcomb

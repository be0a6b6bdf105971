#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "addcomb/doubling.hpp"
#include "addcomb/int_set.hpp"
#include "addcomb/operators.hpp"

namespace addcomb {

/// Volume of a one-dimensional set: (max - min) / gcd + 1. Throws
/// DomainError when the set is not one-dimensional.
Int volume_1d(const IntSet& a);

/// Representative of the class of A under translation, scaling and
/// reflexion: the lexicographically larger of normalize(A) and its reflexion.
NormalSet canonical_form(const IntSet& a);

struct ChainRules {
  /// Cap level doublings at C(i, 2) + 1 instead of the full parametrized
  /// range C(i, 2) + 2. The strict cap excludes the top doubling value at
  /// every level (e.g. {0,1,2,4,8}).
  bool strict_doubling_cap = false;
};

/// Largest doubling admitted for a chain level of cardinality i.
Int chain_doubling_cap(int i, const ChainRules& rules = {});

/// Whether `next` = `prev` ∪ {y}, y outside the hull of prev, has the largest
/// volume among the one-dimensional sets prev ∪ {y'} (y' outside the hull)
/// with the same doubling. Throws DomainError if next is not such an
/// extension, is not one-dimensional, or exceeds the doubling cap.
bool is_chain_extension(const IntSet& prev, const IntSet& next,
                        const ChainRules& rules = {});

/// Witness that a set is a chain.
struct ChainCertificate {
  /// A_3 ⊂ A_4 ⊂ ... ⊂ A_k = A, as literal subsets of A.
  std::vector<IntSet> sets;
  std::vector<DoublingProfile> profiles;
  /// Factorization of normalize(A_k); empty when factorize threw, in which
  /// case factorization_error holds the message.
  std::optional<Factorization> factorization;
  std::string factorization_error;
  Int volume = 0;

  const IntSet& top() const { return sets.back(); }
};

/// Memoized chain recognition over deletions of the current min or max.
/// Safe to share between threads.
class ChainRecognizer {
 public:
  explicit ChainRecognizer(ChainRules rules = {}) : rules_(rules) {}

  bool is_chain(const IntSet& a);
  std::optional<ChainCertificate> certify(const IntSet& a);

  const ChainRules& rules() const noexcept { return rules_; }

 private:
  std::optional<IntSet> predecessor(const IntSet& a);

  ChainRules rules_;
  std::shared_mutex mutex_;
  std::map<NormalSet, bool> memo_;
};

/// One-shot recognition. Requires |A| >= 3.
std::optional<ChainCertificate> is_chain(const IntSet& a,
                                         const ChainRules& rules = {});

struct ChainRecord {
  NormalSet set;
  DoublingProfile profile;
  Int volume;
};

struct ChainEnumOptions {
  int cap = 10;
  unsigned threads = 0;  // 0: hardware concurrency
  ChainRules rules;
};

/// Canonical chains of cardinality 3..k, one vector per level (index 0 is
/// level 3), each sorted by (doubling, set). Throws CapacityError above
/// options.cap.
std::vector<std::vector<ChainRecord>> enumerate_chain_levels(
    int k, const ChainEnumOptions& options = {});

/// The last level of enumerate_chain_levels.
std::vector<ChainRecord> enumerate_chains(int k,
                                          const ChainEnumOptions& options = {});

/// Outcome of checking vol(A) = mu(k, T) + 1 and the growth-step
/// factorization for one chain.
struct TheoremReport {
  int k = 0;
  Int t = 0;
  Int volume = 0;
  Int mu = 0;
  bool volume_ok = false;
  bool base_ok = false;
  bool replay_ok = false;
  std::optional<Factorization> factorization;
  std::vector<std::string> failures;

  bool pass() const noexcept { return failures.empty(); }
};

TheoremReport verify_main_theorem(const ChainCertificate& cert);

}  // namespace addcomb

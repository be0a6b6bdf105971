#pragma once

#include <optional>
#include <string>
#include <vector>

#include "addcomb/int_set.hpp"
#include "addcomb/search.hpp"

namespace addcomb {

/// Quantities of a right extension A_x = A ∪ {x} of a one-dimensional
/// normal set, and the outcome of the statements checked on it.
struct ExtensionCheck {
  Int x = 0;
  int k = 0;
  Int t = 0;
  Int t_x = 0;
  Int delta_t = 0;
  /// |2A ∩ (A + x)|
  Int overlap = 0;
  int c_before = 0;
  int c_after = 0;
  /// T_x > 3(k+1) - 4 while T <= 3k - 4.
  bool crossing = false;

  /// Lower bound x >= 2a - (a_1 + a_2 - 2) under its hypotheses, for
  /// T <= 3k - 4.
  bool lower_bound_applicable = false;
  Int lower_bound = 0;
  /// x = mu(k+1, T_x) and |A ∩ (x - a + A)| = ceil((2a - x + 1) / 2) under
  /// their hypotheses (needs a vol1 table for k + 1).
  bool crossing_shape_applicable = false;
  Int shifted_overlap = 0;

  /// Failed statements, empty when everything checked holds.
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Requires A one-dimensional and normal, and x among
/// extension_candidates(A); throws DomainError otherwise. Statements that
/// need 1-extremality of A_x are only evaluated when `table` is given.
ExtensionCheck check_extension_lemmas(const IntSet& a, Int x,
                                      Vol1Table* table = nullptr);

struct ExtensionSweepSummary {
  int k = 0;
  std::uint64_t sets = 0;
  std::uint64_t extensions = 0;
  std::uint64_t lower_bound_checked = 0;
  std::uint64_t crossing_shape_checked = 0;
  /// Failing checks, ordered by (set, x).
  std::vector<std::pair<NormalSet, ExtensionCheck>> failures;
};

/// check_extension_lemmas over every one-dimensional normal A with |A| = k
/// and max A <= mu(k, |2A|) + k, for every candidate x.
ExtensionSweepSummary sweep_extension_lemmas(int k, unsigned threads = 0,
                                             Vol1Table* table = nullptr);

struct LemmaResult {
  std::string lemma;
  bool pass = true;
  std::vector<std::string> notes;
};

struct UniquenessReport {
  NormalSet set;
  std::vector<LemmaResult> checked;
  /// Lemmas whose hypotheses A does not meet, with the reason.
  std::vector<std::string> skipped;

  bool pass() const;
};

/// Runs each of the uniqueness statements whose hypotheses A meets.
/// A must be normal; 1-extremality is decided through `table`.
UniquenessReport check_uniqueness_lemmas(const NormalSet& a, Vol1Table& table);

}  // namespace addcomb

#include "addcomb/chains.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "addcomb/dimension.hpp"
#include "addcomb/errors.hpp"
#include "parallel.hpp"

namespace addcomb {

Int volume_1d(const IntSet& a) {
  if (a.size() == 1) return 1;
  if (additive_dim(a) != 1) {
    throw DomainError("volume is only computed for one-dimensional sets, got " +
                      a.str());
  }
  return (a.max() - a.min()) / gcd_of(a) + 1;
}

NormalSet canonical_form(const IntSet& a) {
  NormalSet n = normalize(a).set;
  NormalSet r = reflexion(n);
  return n < r ? r : n;
}

Int chain_doubling_cap(int i, const ChainRules& rules) {
  return Int{i} * (i - 1) / 2 + (rules.strict_doubling_cap ? 1 : 2);
}

namespace {

bool one_dimensional(const IntSet& s) {
  return s.size() >= 2 && additive_dim(s) == 1;
}

// Elements of (2P - P) outside the hull of P.
std::vector<Int> outside_candidates(const IntSet& prev) {
  const IntSet pool = difference(sumset(prev, prev), prev);
  std::vector<Int> out;
  for (Int y : pool.elements())
    if (y < prev.min() || y > prev.max()) out.push_back(y);
  return out;
}

// Conditions on `next` alone: one-dimensional and under the doubling cap.
bool level_admissible(const IntSet& next, const ChainRules& rules) {
  return one_dimensional(next) &&
         doubling(next) <= chain_doubling_cap(next.k(), rules);
}

bool is_three_term_progression(const IntSet& a) {
  return a.size() == 3 && a[2] - a[1] == a[1] - a[0];
}

// Assumes the preconditions of is_chain_extension hold.
bool beats_all_competitors(const IntSet& prev, const IntSet& next) {
  const Int t = doubling(next);
  const Int vol = volume_1d(next);
  for (Int y : outside_candidates(prev)) {
    IntSet rival = with_element(prev, y);
    if (doubling(rival) != t || !one_dimensional(rival)) continue;
    if (volume_1d(rival) > vol) return false;
  }
  return true;
}

}  // namespace

bool is_chain_extension(const IntSet& prev, const IntSet& next,
                        const ChainRules& rules) {
  if (next.size() != prev.size() + 1 || prev.size() < 2) {
    throw DomainError("chain extension must add exactly one element");
  }
  const Int y = next.min() < prev.min() ? next.min() : next.max();
  if (y >= prev.min() && y <= prev.max()) {
    throw DomainError("chain extension must add an element outside the hull");
  }
  if (with_element(prev, y) != next) {
    throw DomainError(next.str() + " does not contain " + prev.str());
  }
  if (!one_dimensional(next)) {
    throw DomainError(next.str() + " is not one-dimensional");
  }
  if (doubling(next) > chain_doubling_cap(next.k(), rules)) {
    throw DomainError(next.str() + " exceeds the chain doubling cap");
  }
  return beats_all_competitors(prev, next);
}

bool ChainRecognizer::is_chain(const IntSet& a) {
  if (a.size() < 3) throw DomainError("chains have at least three elements");
  if (a.size() == 3) return is_three_term_progression(a);
  const NormalSet key = canonical_form(a);
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const bool result = predecessor(key).has_value();
  std::unique_lock lock(mutex_);
  memo_[key] = result;
  return result;
}

// The deleted-extreme subset through which `a` is certified, if any; tries
// removing the max before the min.
std::optional<IntSet> ChainRecognizer::predecessor(const IntSet& a) {
  if (!level_admissible(a, rules_)) return std::nullopt;
  for (Int drop : {a.max(), a.min()}) {
    IntSet prev = without_element(a, drop);
    if (is_chain(prev) && beats_all_competitors(prev, a)) return prev;
  }
  return std::nullopt;
}

std::optional<ChainCertificate> ChainRecognizer::certify(const IntSet& a) {
  if (!is_chain(a)) return std::nullopt;
  ChainCertificate cert;
  std::vector<IntSet> rev{a};
  while (rev.back().size() > 3) {
    auto prev = predecessor(rev.back());
    if (!prev) throw std::logic_error("chain memo inconsistent");
    rev.push_back(std::move(*prev));
  }
  cert.sets.assign(rev.rbegin(), rev.rend());
  for (const auto& s : cert.sets) cert.profiles.push_back(profile(s.k(), doubling(s)));
  cert.volume = volume_1d(a);
  try {
    cert.factorization = factorize(normalize(a).set);
  } catch (const FactorizationFailed& e) {
    cert.factorization_error = e.what();
  }
  return cert;
}

std::optional<ChainCertificate> is_chain(const IntSet& a,
                                         const ChainRules& rules) {
  ChainRecognizer recognizer(rules);
  return recognizer.certify(a);
}

std::vector<std::vector<ChainRecord>> enumerate_chain_levels(
    int k, const ChainEnumOptions& options) {
  if (k < 3) throw DomainError("chains have at least three elements");
  if (k > options.cap) {
    throw CapacityError("chain enumeration capped at k = " +
                        std::to_string(options.cap));
  }
  auto record = [](NormalSet s) {
    const Int t = doubling(s);
    const Int vol = volume_1d(s);
    DoublingProfile p = profile(s.k(), t);
    return ChainRecord{std::move(s), p, vol};
  };

  std::vector<std::vector<ChainRecord>> levels;
  levels.push_back({record(NormalSet{0, 1, 2})});
  for (int level = 4; level <= k; ++level) {
    const auto& frontier = levels.back();
    std::vector<std::vector<NormalSet>> found(frontier.size());
    detail::parallel_for(frontier.size(), options.threads, [&](std::size_t i) {
      const IntSet& prev = frontier[i].set;
      for (Int y : outside_candidates(prev)) {
        IntSet next = with_element(prev, y);
        if (!level_admissible(next, options.rules)) continue;
        if (beats_all_competitors(prev, next)) {
          found[i].push_back(canonical_form(next));
        }
      }
    });
    std::vector<NormalSet> merged;
    for (auto& part : found)
      for (auto& s : part) merged.push_back(std::move(s));
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    std::vector<ChainRecord> next_level;
    for (auto& s : merged) next_level.push_back(record(std::move(s)));
    std::sort(next_level.begin(), next_level.end(),
              [](const ChainRecord& a, const ChainRecord& b) {
                return std::tie(a.profile.t, a.set) < std::tie(b.profile.t, b.set);
              });
    levels.push_back(std::move(next_level));
  }
  return levels;
}

std::vector<ChainRecord> enumerate_chains(int k,
                                          const ChainEnumOptions& options) {
  return std::move(enumerate_chain_levels(k, options).back());
}

TheoremReport verify_main_theorem(const ChainCertificate& cert) {
  TheoremReport r;
  const IntSet& a = cert.top();
  r.k = a.k();
  r.t = doubling(a);
  r.volume = volume_1d(a);
  r.mu = mu(r.k, r.t);
  r.volume_ok = r.volume == r.mu + 1;
  if (!r.volume_ok) {
    r.failures.push_back("volume " + std::to_string(r.volume) + " != mu + 1 = " +
                         std::to_string(r.mu + 1) + " for " + a.str());
  }

  if (cert.factorization) {
    r.factorization = cert.factorization;
  } else if (cert.factorization_error.empty()) {
    try {
      r.factorization = factorize(normalize(a).set);
    } catch (const FactorizationFailed& e) {
      r.failures.push_back(e.what());
    }
  } else {
    r.failures.push_back(cert.factorization_error);
  }

  if (r.factorization) {
    const auto& f = *r.factorization;
    const auto within = [](const IntSet& s) {
      return doubling(s) <= 3 * static_cast<Int>(s.size()) - 4;
    };
    if (!f.b_prime_case) {
      r.base_ok = within(f.base);
    } else {
      r.base_ok = f.core && within(*f.core) && f.base.size() <= f.core->size() + 1;
    }
    if (!r.base_ok) {
      r.failures.push_back("base " + f.base.str() +
                           " does not satisfy |2B| <= 3|B| - 4");
    }
    const NormalSet rebuilt = replay(f);
    if (a.size() <= kIsomorphismCap) {
      r.replay_ok = f_isomorphic(rebuilt, a).has_value();
    } else {
      // Affine images are Freiman isomorphic.
      r.replay_ok = canonical_form(rebuilt) == canonical_form(a);
    }
    if (!r.replay_ok) {
      r.failures.push_back("replayed steps give " + rebuilt.str() +
                           ", not isomorphic to " + a.str());
    }
  }
  return r;
}

}  // namespace addcomb

#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <memory>

#include "addcomb/chains.hpp"
#include "addcomb/dimension.hpp"
#include "addcomb/doubling.hpp"
#include "parallel.hpp"

namespace addcomb::detail {

namespace {

struct PartitionResult {
  // Indexed by t - t_min; raw element lists.
  std::vector<std::vector<std::vector<Int>>> found;
  std::vector<std::vector<std::vector<Int>>> over_mu;
};

}  // namespace

Vol1Sweep run_vol1_sweep(int k, const std::vector<Int>& bound_by_t,
                         unsigned threads) {
  const Int t_min = min_doubling(k);
  const std::size_t n_t = bound_by_t.size();
  std::vector<Int> mu_by_t(n_t, 0);
  Int top = -1;
  for (std::size_t i = 0; i < n_t; ++i) {
    if (bound_by_t[i] < 0) continue;
    mu_by_t[i] = mu(k, t_min + static_cast<Int>(i));
    top = std::max(top, bound_by_t[i]);
  }

  Vol1Sweep out;
  out.k = k;
  out.t_min = t_min;
  out.best_max.assign(n_t, -1);
  out.witnesses.resize(n_t);
  out.violations.resize(n_t);
  if (top < k - 1) return out;

  // Partition i handles max element top - i, so larger volumes come first
  // and raise `best` early.
  const auto n_parts = static_cast<std::size_t>(top - (k - 1) + 1);
  std::unique_ptr<std::atomic<Int>[]> best(new std::atomic<Int>[n_t]);
  for (std::size_t i = 0; i < n_t; ++i) best[i] = -1;
  std::vector<PartitionResult> parts(n_parts);

  parallel_for(n_parts, threads, [&](std::size_t p) {
    const Int m = top - static_cast<Int>(p);
    Int t_cap = -1;
    for (std::size_t i = 0; i < n_t; ++i)
      if (bound_by_t[i] >= m) t_cap = t_min + static_cast<Int>(i);
    if (t_cap < 0) return;

    PartitionResult& res = parts[p];
    res.found.resize(n_t);
    res.over_mu.resize(n_t);
    auto leaf = [&](std::span<const Int> elems, Int t) {
      if (t < t_min) return;
      const auto i = static_cast<std::size_t>(t - t_min);
      if (i >= n_t || bound_by_t[i] < m) return;
      const bool above_mu = m > mu_by_t[i];
      if (!above_mu && best[i].load(std::memory_order_relaxed) > m) return;
      if (relation_rank_value(elems) != k - 2) return;
      std::vector<Int> s(elems.begin(), elems.end());
      if (above_mu) res.over_mu[i].push_back(s);
      res.found[i].push_back(std::move(s));
      Int seen = best[i].load(std::memory_order_relaxed);
      while (seen < m && !best[i].compare_exchange_weak(seen, m)) {
      }
    };
    walk_partition(k, m, t_cap, leaf);
  });

  // Deterministic fold: partitions in order of decreasing m.
  for (std::size_t i = 0; i < n_t; ++i) {
    std::vector<NormalSet> wit, viol;
    for (std::size_t p = 0; p < n_parts; ++p) {
      if (parts[p].found.empty()) continue;
      const Int m = top - static_cast<Int>(p);
      for (const auto& s : parts[p].over_mu[i])
        viol.push_back(canonical_form(make_sorted_set(s)));
      if (out.best_max[i] < 0 && !parts[p].found[i].empty()) out.best_max[i] = m;
      if (out.best_max[i] == m) {
        for (const auto& s : parts[p].found[i])
          wit.push_back(canonical_form(make_sorted_set(s)));
      }
    }
    for (auto* v : {&wit, &viol}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    out.witnesses[i] = std::move(wit);
    out.violations[i] = std::move(viol);
  }
  return out;
}

}  // namespace addcomb::detail

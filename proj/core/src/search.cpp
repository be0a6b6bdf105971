#include "addcomb/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "addcomb/dimension.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/operators.hpp"
#include "addcomb/report_io.hpp"
#include "sweep.hpp"

namespace addcomb {

namespace {

// C(n, r), saturating.
std::uint64_t binomial(Int n, Int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (Int i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

Int gcd_with(Int g, std::span<const Int> v) {
  for (Int e : v) g = std::gcd(g, e);
  return g;
}

void check_budget(int k, Int max_elem, const SearchOptions& o) {
  const std::uint64_t est = estimate_normal_set_count(k, max_elem);
  if (est > o.budget && !o.force) {
    throw CapacityError("sweep of about " + std::to_string(est) +
                            " sets exceeds the budget of " +
                            std::to_string(o.budget) + "; use force to run it",
                        est);
  }
}

}  // namespace

std::uint64_t estimate_normal_set_count(int k, Int max_elem) {
  // sum over m of C(m - 1, k - 2) = C(max_elem, k - 1)
  if (k < 2) return 0;
  return binomial(max_elem, k - 1);
}

NormalSetEnumerator::NormalSetEnumerator(int k, Int max_elem,
                                         std::uint64_t budget)
    : NormalSetEnumerator(k, max_elem, EnumerationCursor{k - 1, {}}, budget) {}

NormalSetEnumerator::NormalSetEnumerator(int k, Int max_elem,
                                         EnumerationCursor from,
                                         std::uint64_t budget)
    : k_(k), max_elem_(max_elem), m_(from.max_elem) {
  if (k < 3) throw DomainError("normal-set enumeration requires k >= 3");
  if (max_elem < k - 1) {
    throw DomainError("normal-set enumeration requires max_elem >= k - 1");
  }
  const std::uint64_t est = estimate_normal_set_count(k, max_elem);
  if (est > budget) {
    throw CapacityError("enumeration of about " + std::to_string(est) +
                            " sets exceeds the budget",
                        est);
  }
  if (from.interior.empty()) {
    for (Int i = 1; i <= k - 2; ++i) interior_.push_back(i);
  } else {
    interior_ = std::move(from.interior);
  }
  if (m_ < k - 1 || static_cast<int>(interior_.size()) != k - 2 ||
      !std::is_sorted(interior_.begin(), interior_.end()) ||
      std::adjacent_find(interior_.begin(), interior_.end()) != interior_.end() ||
      (!interior_.empty() && (interior_.front() < 1 || interior_.back() >= m_))) {
    throw DomainError("invalid enumeration cursor");
  }
  done_ = m_ > max_elem_;
  skip_to_valid();
}

// Next combination of k - 2 interior elements in [1, m - 1], moving to m + 1
// when exhausted.
bool NormalSetEnumerator::advance() {
  const int n = k_ - 2;
  int i = n - 1;
  while (i >= 0 && interior_[i] == m_ - (n - i)) --i;
  if (i >= 0) {
    ++interior_[i];
    for (int j = i + 1; j < n; ++j) interior_[j] = interior_[j - 1] + 1;
    return true;
  }
  ++m_;
  if (m_ > max_elem_) return false;
  for (int j = 0; j < n; ++j) interior_[j] = j + 1;
  return true;
}

void NormalSetEnumerator::skip_to_valid() {
  while (!done_ && gcd_with(m_, interior_) != 1) done_ = !advance();
}

std::optional<NormalSet> NormalSetEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Int> e;
  e.reserve(interior_.size() + 2);
  e.push_back(0);
  e.insert(e.end(), interior_.begin(), interior_.end());
  e.push_back(m_);
  NormalSet out(make_sorted_set(std::move(e)));
  done_ = !advance();
  skip_to_valid();
  return out;
}

EnumerationCursor NormalSetEnumerator::cursor() const {
  if (done_) return {max_elem_ + 1, {}};
  return {m_, interior_};
}

std::vector<NormalSet> enumerate_normal_sets(int k, Int max_elem,
                                             std::uint64_t budget) {
  NormalSetEnumerator en(k, max_elem, budget);
  std::vector<NormalSet> out;
  while (auto s = en.next()) out.push_back(std::move(*s));
  return out;
}

Int default_search_bound(int k, Int t) { return mu(k, t) + k; }

namespace {

SearchReport make_report(int k, Int t, Int bound) {
  const auto p = profile(k, t);
  SearchReport r;
  r.k = k;
  r.t = t;
  r.c = p.c;
  r.b = p.b;
  r.mu = p.mu;
  r.search_bound = bound;
  return r;
}

// Sweeps every t with bounds[t] set and fills the reports; cached reports
// are reused.
std::vector<SearchReport> run_reports(int k, const std::vector<Int>& ts,
                                      const std::vector<Int>& bounds,
                                      const SearchOptions& options) {
  std::vector<SearchReport> out(ts.size());
  std::vector<bool> have(ts.size(), false);
  std::optional<ReportCache> cache;
  if (!options.cache_dir.empty()) cache.emplace(options.cache_dir);
  if (cache) {
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (auto r = cache->load(k, ts[i], bounds[i])) {
        out[i] = std::move(*r);
        have[i] = true;
      }
    }
  }
  if (std::all_of(have.begin(), have.end(), [](bool h) { return h; })) return out;

  const Int t_min = min_doubling(k);
  std::vector<Int> by_t(static_cast<std::size_t>(max_doubling(k) - t_min + 1), -1);
  Int top = k - 1;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (have[i]) continue;
    by_t[static_cast<std::size_t>(ts[i] - t_min)] = bounds[i];
    top = std::max(top, bounds[i]);
  }
  if (top > kSweepMaxElement) {
    throw CapacityError("search bound " + std::to_string(top) +
                        " exceeds the sweep limit of " +
                        std::to_string(kSweepMaxElement));
  }
  check_budget(k, top, options);

  const auto start = std::chrono::steady_clock::now();
  const auto sweep = detail::run_vol1_sweep(k, by_t, options.threads);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (have[i]) continue;
    const auto j = static_cast<std::size_t>(ts[i] - t_min);
    SearchReport r = make_report(k, ts[i], bounds[i]);
    r.observed_max_vol = sweep.best_max[j] < 0 ? 0 : sweep.best_max[j] + 1;
    r.witnesses = sweep.witnesses[j];
    r.violations = sweep.violations[j];
    const NormalSet built = canonical_form(max_volume_construction(k, ts[i]));
    r.attained = std::binary_search(r.witnesses.begin(), r.witnesses.end(), built);
    r.elapsed_seconds = elapsed;
    if (cache) cache->store(r);
    out[i] = std::move(r);
  }
  return out;
}

void require_legal(int k, Int t) {
  if (!is_legal_doubling(k, t)) {
    throw RangeError("no legal parametrization for k = " + std::to_string(k) +
                     ", T = " + std::to_string(t));
  }
}

}  // namespace

SearchReport vol1_oracle(int k, Int t, const SearchOptions& options) {
  require_legal(k, t);
  const Int bound = options.bound.value_or(default_search_bound(k, t));
  if (bound < mu(k, t)) {
    throw DomainError("search bound " + std::to_string(bound) +
                      " is below mu(k, T) = " + std::to_string(mu(k, t)));
  }
  return run_reports(k, {t}, {bound}, options).front();
}

std::vector<SearchReport> verify_conjecture(int k, const SearchOptions& options) {
  if (k < 4) throw DomainError("conjecture verification requires k >= 4");
  std::vector<Int> ts, bounds;
  for (Int t = min_doubling(k); t <= max_doubling(k); ++t) {
    ts.push_back(t);
    const Int bound = options.bound.value_or(default_search_bound(k, t));
    if (bound < mu(k, t)) {
      throw DomainError("search bound " + std::to_string(bound) +
                        " is below mu(k, T) = " + std::to_string(mu(k, t)));
    }
    bounds.push_back(bound);
  }
  return run_reports(k, ts, bounds, options);
}

const std::vector<SearchReport>& Vol1Table::reports(int k) {
  std::lock_guard lock(mutex_);
  auto it = tables_.find(k);
  if (it == tables_.end()) {
    std::vector<SearchReport> rows;
    if (k == 3) {
      rows.push_back(vol1_oracle(3, 5, options_));
    } else {
      rows = verify_conjecture(k, options_);
    }
    it = tables_.emplace(k, std::move(rows)).first;
  }
  return it->second;
}

const SearchReport& Vol1Table::report(int k, Int t) {
  require_legal(k, t);
  for (const auto& r : reports(k))
    if (r.t == t) return r;
  throw RangeError("no report for T = " + std::to_string(t));
}

bool is_1_extremal(const IntSet& a, Vol1Table& table) {
  const Int vol = volume_1d(a);  // DomainError unless one-dimensional
  if (a.size() < 3) return true;
  const Int t = doubling(a);
  const SearchReport& r = table.report(a.k(), t);
  if (vol > r.observed_max_vol) {
    if (normalize(a).set.max() <= r.search_bound) {
      throw std::logic_error("sweep missed " + a.str());
    }
    throw CounterexampleError(a.str() + " has volume " + std::to_string(vol) +
                              ", above every one-dimensional set with max <= " +
                              std::to_string(r.search_bound));
  }
  return vol == r.observed_max_vol;
}

bool is_1_extremal(const IntSet& a) {
  Vol1Table table;
  return is_1_extremal(a, table);
}

}  // namespace addcomb

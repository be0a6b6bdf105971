#include "addcomb/lemmas.hpp"

#include <algorithm>

#include "addcomb/chains.hpp"
#include "addcomb/dimension.hpp"
#include "addcomb/doubling.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/operators.hpp"
#include "addcomb/stable.hpp"
#include "parallel.hpp"
#include "sweep.hpp"

namespace addcomb {

namespace {

std::string num(Int v) { return std::to_string(v); }

// 1-extremality through the table; a set beating the sweep is reported as a
// violation instead of propagating.
bool extremal(const IntSet& s, Vol1Table& table,
              std::vector<std::string>& violations) {
  try {
    return is_1_extremal(s, table);
  } catch (const CounterexampleError& e) {
    violations.push_back(e.what());
    return false;
  }
}

bool one_dimensional(const IntSet& s) {
  return s.size() >= 2 && additive_dim(s) == 1;
}

// Assumes A one-dimensional and normal and x a valid candidate.
ExtensionCheck evaluate(const IntSet& a, const IntSet& two_a, Int x,
                        Vol1Table* table) {
  ExtensionCheck r;
  r.x = x;
  r.k = a.k();
  r.t = static_cast<Int>(two_a.size());
  const IntSet ax = with_element(a, x);
  r.t_x = doubling(ax);
  r.delta_t = r.t_x - r.t;
  r.overlap = static_cast<Int>(intersection_size(two_a, translate(a, x)));
  const int k = r.k;
  auto fail = [&](std::string msg) {
    r.violations.push_back(a.str() + " + " + num(x) + ": " + std::move(msg));
  };

  if (r.delta_t != k + 1 - r.overlap) {
    fail("delta T = " + num(r.delta_t) + " but k + 1 - overlap = " +
         num(k + 1 - r.overlap));
  }
  if (r.delta_t < 2 || r.delta_t > k) {
    fail("delta T = " + num(r.delta_t) + " outside [2, " + num(k) + "]");
  }
  r.c_before = profile(k, r.t).c;
  r.c_after = profile(k + 1, r.t_x).c;
  if (std::abs(r.c_after - r.c_before) > 1) {
    fail("doubling constant moved from " + num(r.c_before) + " to " +
         num(r.c_after));
  }
  r.crossing = r.t_x > 3 * Int{k + 1} - 4 && r.t <= 3 * Int{k} - 4;

  const Int a_max = a.max();
  const Int mu_a = mu(k, r.t);
  const auto splits = stable_splits(a);
  // Only in the 3k - 4 regime: {0,4,6,7,8} + 10 (T = 12 = 3k - 3) meets the
  // other hypotheses and lands below the bound.
  if (r.t <= 3 * Int{k} - 4 && splits.size() == 1 && a_max == mu_a &&
      r.t_x > 3 * Int{k + 1} - 4 && x >= mu(k + 1, r.t_x)) {
    r.lower_bound_applicable = true;
    r.lower_bound = 2 * a_max - (splits[0].a1_max() + splits[0].a2_max() - 2);
    if (x < r.lower_bound) {
      fail("x below 2a - (a1 + a2 - 2) = " + num(r.lower_bound));
    }
  }

  if (table && r.t >= 2 * Int{k} && r.t <= 3 * Int{k} - 4 &&
      r.t_x >= 3 * Int{k + 1} - 3 && splits.size() == 1 &&
      extremal(a, *table, r.violations) && extremal(ax, *table, r.violations)) {
    r.crossing_shape_applicable = true;
    if (x != mu(k + 1, r.t_x)) {
      fail("x != mu(k + 1, T_x) = " + num(mu(k + 1, r.t_x)));
    }
    r.shifted_overlap = static_cast<Int>(
        intersection_size(a, translate(a, x - a_max)));
    const Int expected = (2 * a_max - x + 2) / 2;
    if (r.shifted_overlap != expected) {
      fail("|A ∩ (x - a + A)| = " + num(r.shifted_overlap) + ", expected " +
           num(expected));
    }
  }
  return r;
}

}  // namespace

ExtensionCheck check_extension_lemmas(const IntSet& a, Int x, Vol1Table* table) {
  const IntSet candidates = extension_candidates(a);  // validates A
  if (!candidates.contains(x)) {
    throw DomainError(num(x) + " is not an extension candidate of " + a.str());
  }
  return evaluate(a, sumset(a, a), x, table);
}

ExtensionSweepSummary sweep_extension_lemmas(int k, unsigned threads,
                                             Vol1Table* table) {
  if (k < 3) throw DomainError("extension sweep requires k >= 3");
  const Int t_min = min_doubling(k);
  const Int t_max = k == 3 ? t_min : max_doubling(k);
  Int top = k - 1;
  for (Int t = t_min; t <= t_max; ++t) top = std::max(top, mu(k, t) + k);
  if (top > kSweepMaxElement) {
    throw CapacityError("extension sweep bound " + num(top) +
                        " exceeds the sweep limit");
  }

  struct Part {
    std::uint64_t sets = 0, extensions = 0, lower = 0, shape = 0;
    std::vector<std::pair<NormalSet, ExtensionCheck>> failures;
  };
  const auto n_parts = static_cast<std::size_t>(top - (k - 1) + 1);
  std::vector<Part> parts(n_parts);
  detail::parallel_for(n_parts, threads, [&](std::size_t p) {
    const Int m = k - 1 + static_cast<Int>(p);
    Part& part = parts[p];
    auto leaf = [&](std::span<const Int> elems, Int t) {
      if (t < t_min || t > t_max || m > mu(k, t) + k) return;
      if (relation_rank_value(elems) != k - 2) return;
      IntSet a = make_sorted_set({elems.begin(), elems.end()});
      ++part.sets;
      const IntSet two_a = sumset(a, a);
      const IntSet candidates = extension_candidates(a);
      for (Int x : candidates.elements()) {
        ExtensionCheck c = evaluate(a, two_a, x, table);
        ++part.extensions;
        part.lower += c.lower_bound_applicable;
        part.shape += c.crossing_shape_applicable;
        if (!c.ok()) part.failures.emplace_back(NormalSet(a), std::move(c));
      }
    };
    detail::walk_partition(k, m, t_max, leaf);
  });

  ExtensionSweepSummary out;
  out.k = k;
  for (auto& p : parts) {
    out.sets += p.sets;
    out.extensions += p.extensions;
    out.lower_bound_checked += p.lower;
    out.crossing_shape_checked += p.shape;
    for (auto& f : p.failures) out.failures.push_back(std::move(f));
  }
  std::stable_sort(out.failures.begin(), out.failures.end(),
                   [](const auto& l, const auto& r) {
                     return std::tie(l.first, l.second.x) <
                            std::tie(r.first, r.second.x);
                   });
  return out;
}

bool UniquenessReport::pass() const {
  return std::all_of(checked.begin(), checked.end(),
                     [](const LemmaResult& r) { return r.pass; });
}

namespace {

bool is_two_progression(const IntSet& s) {
  return s.size() >= 2 && is_progression(s, 2);
}

int odd_count(const IntSet& s) {
  return static_cast<int>(std::count_if(s.elements().begin(), s.elements().end(),
                                        [](Int v) { return v % 2 != 0; }));
}

// Right extensions B ∪ {x}, lo < x <= hi, that are 1-extremal.
std::vector<Int> extremal_right_extensions(const NormalSet& b, Int lo, Int hi,
                                           Vol1Table& table,
                                           std::vector<std::string>& errors) {
  std::vector<Int> out;
  for (Int x = lo + 1; x <= hi; ++x) {
    IntSet bx = with_element(b, x);
    if (!one_dimensional(bx)) continue;
    if (extremal(bx, table, errors)) out.push_back(x);
  }
  return out;
}

std::string list(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num(v[i]);
  return s + "]";
}

// mu(k, T) > 2^c for the parameters of A.
bool above_power_of_two(int k, Int t) {
  const auto p = profile(k, t);
  return p.c < 62 && p.mu > (Int{1} << p.c);
}

LemmaResult double_right_extension(const NormalSet& a, Vol1Table& table) {
  LemmaResult r{"double-right-extension", true, {}};
  const Int am = a.max();
  const NormalSet b = op_D(a);
  std::vector<std::string> errors;
  r.notes.push_back("D(A) = " + b.str() + " is " +
                    (extremal(b, table, errors) ? "" : "not ") + "1-extremal");
  const auto xs = extremal_right_extensions(b, 2 * am, 4 * am, table, errors);
  r.notes.push_back("1-extremal x in (2a, 4a]: " + list(xs));
  for (Int x : xs) {
    if (x != 3 * am && x != 4 * am) {
      r.pass = false;
      r.notes.push_back("x = " + num(x) + " is neither 3a nor 4a");
    }
    if (x != 4 * am) {
      r.notes.push_back(with_element(b, x).str() + " is not D(D(A))");
    }
  }
  const Int t = doubling(a);
  if (a.size() >= 3 && am == mu(a.k(), t) && above_power_of_two(a.k(), t)) {
    for (Int x : xs) {
      if (x != 4 * am) {
        r.pass = false;
        r.notes.push_back("mu > 2^c yet x = " + num(x) + " != 4a is 1-extremal");
      }
    }
  } else {
    r.notes.push_back("mu(k, T) <= 2^c or max A != mu: D(D(A)) not forced");
  }
  for (auto& e : errors) {
    r.pass = false;
    r.notes.push_back(std::move(e));
  }
  return r;
}

std::optional<std::string> reflected_extension_hypothesis(const NormalSet& a) {
  const int k = a.k();
  const Int t = doubling(a);
  const Int am = a.max();
  if (am != mu(k, t)) return "max A != mu(k, T)";
  if (!above_power_of_two(k, t)) return "mu(k, T) <= 2^c";
  const NormalSet refl = reflexion(a);
  for (Int y = am + 1; y < 2 * am; ++y) {
    for (const IntSet* base : {&a.set(), &refl.set()}) {
      const IntSet ay = with_element(*base, y);
      const Int ty = doubling(ay);
      if (!is_legal_doubling(k + 1, ty)) continue;
      if (y >= mu(k + 1, ty)) {
        return "y = " + num(y) + " reaches mu(k + 1, |2(" + base->str() +
               " + y)|)";
      }
    }
  }
  return std::nullopt;
}

LemmaResult reflected_right_extension(const NormalSet& a, Vol1Table& table) {
  LemmaResult r{"reflected-right-extension", true, {}};
  const Int am = a.max();
  const NormalSet b = reflexion(op_D(a));
  const NormalSet db = op_D(b);
  std::vector<std::string> errors;
  const auto xs = extremal_right_extensions(b, 2 * am, 4 * am, table, errors);
  r.notes.push_back("B = " + b.str() + "; 1-extremal x in (2a, 4a]: " + list(xs));
  const bool only_db = xs.size() == 1 && xs[0] == db.max();
  if (!only_db) {
    r.pass = false;
    r.notes.push_back("expected exactly D(B) = " + db.str());
  }
  for (auto& e : errors) {
    r.pass = false;
    r.notes.push_back(std::move(e));
  }
  return r;
}

std::optional<StableDecomposition> two_progression_split(const NormalSet& a) {
  for (auto& d : stable_splits(a)) {
    if (is_two_progression(d.a1) && is_two_progression(d.a2) && d.p_len >= 4)
      return d;
  }
  return std::nullopt;
}

LemmaResult two_progression_extension(const NormalSet& a,
                                      ChainRecognizer& chains) {
  LemmaResult r{"two-progression-extension", true, {}};
  const int k = a.k();
  const Int am = a.max();
  std::uint64_t tried = 0;
  for (Int x = am + 1; x <= 2 * am; ++x) {
    const NormalSet ax(with_element(a, x));
    if (!one_dimensional(ax) || doubling(ax) <= 3 * Int{k + 1} - 4) continue;
    const NormalSet refl = reflexion(ax);
    for (Int y = x + 1; y <= 2 * x; ++y) {
      ++tried;
      const IntSet axy = with_element(ax, y);
      if (y != 2 * x && chains.is_chain(axy)) {
        r.pass = false;
        r.notes.push_back(axy.str() + " is a chain but not D(A_x)");
      }
      if (y > x + 2 && y != 2 * x) {
        const IntSet rxy = with_element(refl, y);
        if (chains.is_chain(rxy)) {
          r.pass = false;
          r.notes.push_back(rxy.str() + " is a chain but not D(A_x^-)");
        }
      }
    }
  }
  r.notes.push_back(num(static_cast<Int>(tried)) + " (x, y) pairs examined");
  return r;
}

LemmaResult single_odd_element(const NormalSet& a, ChainRecognizer& chains) {
  LemmaResult r{"single-odd-element", true, {}};
  const auto& e = a.elements();
  const Int x = *std::find_if(e.begin(), e.end(), [](Int v) { return v % 2 != 0; });
  std::vector<Int> halves;
  for (Int v : e)
    if (v != x) halves.push_back(v / 2);
  const IntSet pre = make_sorted_set(std::move(halves));
  bool factor_ok = false;
  if (NormalSet::is_normal(pre)) {
    const NormalSet p(pre);
    try {
      factor_ok = op_Dx(p, x) == a && chains.is_chain(p);
    } catch (const DomainError&) {
    }
  }
  r.notes.push_back("A = D_" + num(x) + "(" + pre.str() + ")" +
                    (factor_ok ? " with a chain operand" : " fails"));
  if (!factor_ok) r.pass = false;

  const IntSet pool = difference(sumset(a, a), a);
  for (Int y : pool.elements()) {
    if (y >= 0 && y <= a.max()) continue;
    const IntSet b = with_element(a, y);
    if (doubling(b) <= 3 * static_cast<Int>(b.size()) - 4) continue;
    if (!chains.is_chain(b)) continue;
    const int odd = odd_count(normalize(b).set);
    r.notes.push_back("chain extension " + b.str() + " has " + num(odd) +
                      " odd element(s) in normal form");
    if (odd != 1) r.pass = false;
  }
  return r;
}

}  // namespace

UniquenessReport check_uniqueness_lemmas(const NormalSet& a, Vol1Table& table) {
  UniquenessReport rep{a, {}, {}};
  if (a.size() < 3 || !one_dimensional(a)) {
    rep.skipped.push_back("all: A is not a one-dimensional set of size >= 3");
    return rep;
  }
  ChainRecognizer chains;
  const bool is_chain = chains.is_chain(a);
  std::vector<std::string> errors;
  const bool is_extremal = extremal(a, table, errors);

  if (is_extremal) {
    rep.checked.push_back(double_right_extension(a, table));
  } else {
    rep.skipped.push_back("double-right-extension: A is not 1-extremal");
  }

  if (!is_chain) {
    rep.skipped.push_back("reflected-right-extension: A is not a chain");
  } else if (auto why = reflected_extension_hypothesis(a)) {
    rep.skipped.push_back("reflected-right-extension: " + *why);
  } else {
    rep.checked.push_back(reflected_right_extension(a, table));
  }

  if (two_progression_split(a)) {
    rep.checked.push_back(two_progression_extension(a, chains));
  } else {
    rep.skipped.push_back(
        "two-progression-extension: no split into 2-progressions with |P| >= 4");
  }

  if (!is_chain) {
    rep.skipped.push_back("single-odd-element: A is not a chain");
  } else if (odd_count(a) != 1) {
    rep.skipped.push_back("single-odd-element: A has " + num(odd_count(a)) +
                          " odd elements");
  } else {
    rep.checked.push_back(single_odd_element(a, chains));
  }

  if (!errors.empty()) {
    rep.checked.push_back({"extremality", false, errors});
  }
  return rep;
}

}  // namespace addcomb

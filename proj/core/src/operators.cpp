#include "addcomb/operators.hpp"

#include <algorithm>

#include "addcomb/doubling.hpp"
#include "addcomb/errors.hpp"

namespace addcomb {

NormalSet op_D(const NormalSet& a) {
  if (a.size() < 2) throw DomainError("D requires |A| >= 2");
  return NormalSet(with_element(a, 2 * a.max()));
}

NormalSet op_Dx(const NormalSet& a, Int x) {
  if (x % 2 == 0) {
    throw DomainError("D_x requires odd x, got " + std::to_string(x));
  }
  if (a.set().contains(x) || !sumset(a, a).contains(x)) {
    throw DomainError("D_x requires x in 2A \\ A, got x = " +
                      std::to_string(x) + " for " + a.str());
  }
  std::vector<Int> out;
  out.reserve(a.size() + 1);
  for (Int e : a.elements()) out.push_back(2 * e);
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return NormalSet(make_sorted_set(std::move(out)));
}

std::string_view variant_name(PhiVariant v) noexcept {
  switch (v) {
    case PhiVariant::ExtendRight:
      return "D";
    case PhiVariant::ExtendRightOfReflexion:
      return "D_refl";
    case PhiVariant::DilateAdjoinOdd:
      return "Dx";
    case PhiVariant::DilateAdjoinOddOfReflexion:
      return "Dx_refl";
  }
  return "?";
}

PhiVariant parse_variant(std::string_view name) {
  for (auto v : {PhiVariant::ExtendRight, PhiVariant::ExtendRightOfReflexion,
                 PhiVariant::DilateAdjoinOdd,
                 PhiVariant::DilateAdjoinOddOfReflexion}) {
    if (variant_name(v) == name) return v;
  }
  throw DomainError("unknown growth step \"" + std::string(name) + "\"");
}

namespace {

bool reflects(PhiVariant v) {
  return v == PhiVariant::ExtendRightOfReflexion ||
         v == PhiVariant::DilateAdjoinOddOfReflexion;
}

bool dilates(PhiVariant v) {
  return v == PhiVariant::DilateAdjoinOdd ||
         v == PhiVariant::DilateAdjoinOddOfReflexion;
}

}  // namespace

NormalSet phi_apply(const PhiStep& step, const IntSet& x) {
  NormalSet base = normalize(x).set;
  if (reflects(step.variant)) base = reflexion(base);
  if (!dilates(step.variant)) {
    if (step.x) throw DomainError("D steps take no odd element");
    return op_D(base);
  }
  if (!step.x) throw DomainError("D_x steps need an odd element");
  return op_Dx(base, *step.x);
}

std::vector<PhiPreimage> phi_invert(const NormalSet& y) {
  if (y.size() < 4) throw DomainError("phi_invert requires |Y| >= 4");
  std::vector<PhiPreimage> out;
  auto accept = [&](PhiStep step, const IntSet& pre) {
    if (!NormalSet::is_normal(pre)) return;
    NormalSet x(pre);
    try {
      if (phi_apply(step, x) == y) out.push_back({step, std::move(x)});
    } catch (const DomainError&) {
    }
  };

  const auto& e = y.elements();
  const Int top = e[e.size() - 1];
  const Int second = e[e.size() - 2];
  if (top == 2 * second) {
    IntSet rest = without_element(y, top);
    accept({PhiVariant::ExtendRight, std::nullopt}, rest);
    accept({PhiVariant::ExtendRightOfReflexion, std::nullopt}, reflexion(rest));
  }

  const auto odd_count = std::count_if(e.begin(), e.end(),
                                       [](Int v) { return v % 2 != 0; });
  if (odd_count == 1) {
    const Int x = *std::find_if(e.begin(), e.end(),
                                [](Int v) { return v % 2 != 0; });
    std::vector<Int> halves;
    for (Int v : e)
      if (v != x) halves.push_back(v / 2);
    IntSet pre = make_sorted_set(std::move(halves));
    accept({PhiVariant::DilateAdjoinOdd, x}, pre);
    accept({PhiVariant::DilateAdjoinOddOfReflexion, x}, reflexion(pre));
  }
  return out;
}

namespace {

bool at_most_3k_minus_4(const IntSet& s) {
  return doubling(s) <= 3 * static_cast<Int>(s.size()) - 4;
}

std::optional<Factorization> peel(const NormalSet& x,
                                  std::vector<PhiStep>& peeled) {
  if (at_most_3k_minus_4(x)) {
    return Factorization{x, {peeled.rbegin(), peeled.rend()}, false,
                         std::nullopt};
  }
  if (x.size() >= 4) {
    for (auto& pre : phi_invert(x)) {
      peeled.push_back(pre.step);
      auto found = peel(pre.preimage, peeled);
      peeled.pop_back();
      if (found) return found;
    }
  }
  if (x.size() >= 4) {
    for (Int drop : {x.max(), Int{0}}) {
      NormalSet smaller = normalize(without_element(x, drop)).set;
      if (at_most_3k_minus_4(smaller)) {
        return Factorization{x, {peeled.rbegin(), peeled.rend()}, true,
                             std::move(smaller)};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Factorization factorize(const NormalSet& a) {
  std::vector<PhiStep> peeled;
  auto found = peel(a, peeled);
  if (!found) {
    throw FactorizationFailed("no growth-step factorization of " + a.str() +
                              " reaches a base with |2B| <= 3|B| - 4");
  }
  return std::move(*found);
}

NormalSet replay(const Factorization& f) {
  NormalSet x = f.base;
  for (const auto& step : f.steps) x = phi_apply(step, x);
  return x;
}

NormalSet max_volume_construction(int k, Int t) {
  const auto p = profile(k, t);
  if (p.c == 2) {
    std::vector<Int> out{0};
    if (p.b == 0) {
      for (Int i = 1; i < k; ++i) out.push_back(i);
    } else {
      for (Int i = p.b + 1; i <= k + p.b - 1; ++i) out.push_back(i);
    }
    return NormalSet(make_sorted_set(std::move(out)));
  }
  return op_D(max_volume_construction(k - 1, t - (k - 1)));
}

}  // namespace addcomb

#include "addcomb/doubling.hpp"

#include <string>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

Int formula(int k, int c, int b) {
  return Int{c} * k - Int{c} * (c + 1) / 2 + b + 2;
}

Int mu_of(int k, int c, int b) {
  return (Int{1} << (c - 2)) * (k - c + b + 1);
}

bool legal_region(int k, int c, int b) {
  if (c == 2 && b == 0) return k >= 3;
  return k >= 4 && c >= 2 && c <= k - 2 && b >= 1 && b <= k - c - 1;
}

}  // namespace

bool is_legal_doubling(int k, Int t) noexcept {
  if (k == 3) return t == 5;
  return k >= 4 && k <= 62 && t >= min_doubling(k) && t <= max_doubling(k);
}

DoublingProfile profile(int k, Int t) {
  if (!is_legal_doubling(k, t)) {
    if (k < 3 || k > 62) {
      throw RangeError("cardinality " + std::to_string(k) +
                       " outside the supported range [3, 62]");
    }
    throw RangeError("doubling " + std::to_string(t) + " for k = " +
                     std::to_string(k) + " outside [" +
                     std::to_string(min_doubling(k)) + ", " +
                     std::to_string(max_doubling(k)) + "]");
  }
  if (t == min_doubling(k)) return {k, t, 2, 0, mu_of(k, 2, 0)};
  for (int c = 2; c <= k - 2; ++c) {
    const Int lo = formula(k, c, 1);
    const Int hi = formula(k, c, k - c - 1);
    if (t >= lo && t <= hi) {
      const int b = static_cast<int>(t - lo) + 1;
      return {k, t, c, b, mu_of(k, c, b)};
    }
  }
  throw RangeError("doubling " + std::to_string(t) +
                   " not covered by the parametrization");  // unreachable
}

Int doubling_from_profile(int k, int c, int b) {
  if (!legal_region(k, c, b)) {
    throw DomainError("(c, b) = (" + std::to_string(c) + ", " +
                      std::to_string(b) + ") is not legal for k = " +
                      std::to_string(k));
  }
  return formula(k, c, b);
}

Int mu(int k, Int t) { return profile(k, t).mu; }

}  // namespace addcomb

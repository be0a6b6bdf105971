#include "addcomb/int_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "addcomb/errors.hpp"

namespace addcomb {

namespace {

void check_magnitude(Int x) {
  if (x > kMaxMagnitude || x < -kMaxMagnitude) {
    throw DomainError("set element " + std::to_string(x) +
                      " exceeds the supported magnitude 2^60");
  }
}

// out |= src << shift, where out is wide enough to hold the result.
void or_shifted(std::vector<std::uint64_t>& out,
                std::span<const std::uint64_t> src, Int shift) {
  const auto word = static_cast<std::size_t>(shift / 64);
  const auto bit = static_cast<unsigned>(shift % 64);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const std::uint64_t w = src[i];
    if (w == 0) continue;
    if (i + word < out.size()) out[i + word] |= w << bit;
    if (bit != 0 && i + word + 1 < out.size()) {
      out[i + word + 1] |= w >> (64 - bit);
    }
  }
}

std::vector<std::uint64_t> sum_bits(const IntSet& a, const IntSet& b) {
  const Int width = a.length() + b.length() - 1;
  std::vector<std::uint64_t> out(static_cast<std::size_t>((width + 63) / 64));
  // Iterate over the smaller operand.
  const IntSet& outer = a.size() <= b.size() ? a : b;
  const IntSet& inner = a.size() <= b.size() ? b : a;
  for (Int e : outer.elements()) {
    or_shifted(out, inner.hull_bits(), e - outer.min());
  }
  return out;
}

bool bits_usable(const IntSet& a, const IntSet& b) {
  return a.has_bits() && b.has_bits() &&
         a.length() + b.length() - 1 <= kMaxBitHull;
}

}  // namespace

IntSet::IntSet(std::vector<Int> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw DomainError("empty integer set");
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
    throw DomainError("duplicate element in integer set");
  }
  check_magnitude(elems_.front());
  check_magnitude(elems_.back());
  build_bits();
}

IntSet::IntSet(std::initializer_list<Int> elements)
    : IntSet(std::vector<Int>(elements)) {}

IntSet::IntSet(Trusted, std::vector<Int> sorted_unique)
    : elems_(std::move(sorted_unique)) {
  assert(!elems_.empty());
  assert(std::adjacent_find(elems_.begin(), elems_.end(),
                            std::greater_equal<>()) == elems_.end());
  if (elems_.empty()) throw DomainError("empty integer set");
  check_magnitude(elems_.front());
  check_magnitude(elems_.back());
  build_bits();
}

void IntSet::build_bits() {
  const Int len = length();
  if (len > kMaxBitHull) return;
  bits_.assign(static_cast<std::size_t>((len + 63) / 64), 0);
  for (Int e : elems_) {
    const Int off = e - min();
    bits_[static_cast<std::size_t>(off / 64)] |= std::uint64_t{1} << (off % 64);
  }
}

bool IntSet::contains(Int x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::string IntSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  out += '}';
  return out;
}

IntSet make_sorted_set(std::vector<Int> sorted_unique) {
  return IntSet(IntSet::Trusted{}, std::move(sorted_unique));
}

NormalSet::NormalSet(IntSet s) : set_(std::move(s)) {
  if (!is_normal(set_)) {
    throw DomainError("set " + set_.str() + " is not in normal form");
  }
}

NormalSet::NormalSet(std::initializer_list<Int> elements)
    : NormalSet(IntSet(elements)) {}

bool NormalSet::is_normal(const IntSet& s) noexcept {
  if (s.min() != 0) return false;
  if (s.size() == 1) return true;
  return gcd_of(s) == 1;
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  if (bits_usable(a, b)) {
    const auto bits = sum_bits(a, b);
    const Int base = a.min() + b.min();
    std::vector<Int> out;
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word) {
        const int off = std::countr_zero(word);
        out.push_back(base + static_cast<Int>(w * 64 + off));
        word &= word - 1;
      }
    }
    return make_sorted_set(std::move(out));
  }
  std::vector<Int> out;
  out.reserve(a.size() * b.size());
  for (Int x : a.elements())
    for (Int y : b.elements()) out.push_back(x + y);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return make_sorted_set(std::move(out));
}

IntSet difference(const IntSet& a, const IntSet& b) {
  return sumset(a, negate(b));
}

Int doubling(const IntSet& a) {
  if (bits_usable(a, a)) {
    Int n = 0;
    for (auto w : sum_bits(a, a)) n += std::popcount(w);
    return n;
  }
  return static_cast<Int>(sumset(a, a).size());
}

std::size_t intersection_size(const IntSet& a, const IntSet& b) {
  std::size_t n = 0;
  auto i = a.elements().begin();
  auto j = b.elements().begin();
  while (i != a.elements().end() && j != b.elements().end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

IntSet negate(const IntSet& a) {
  std::vector<Int> out(a.elements().rbegin(), a.elements().rend());
  for (auto& x : out) x = -x;
  return make_sorted_set(std::move(out));
}

IntSet translate(const IntSet& a, Int t) {
  std::vector<Int> out(a.elements().begin(), a.elements().end());
  for (auto& x : out) x += t;
  return make_sorted_set(std::move(out));
}

IntSet dilate(const IntSet& a, Int f) {
  if (f == 0) throw DomainError("dilation factor must be nonzero");
  std::vector<Int> out(a.elements().begin(), a.elements().end());
  for (auto& x : out) {
    check_magnitude(x);
    if (__builtin_mul_overflow(x, f, &x)) {
      throw DomainError("dilation overflows 64-bit integers");
    }
  }
  return IntSet(std::move(out));
}

IntSet with_element(const IntSet& a, Int x) {
  if (a.contains(x)) return a;
  std::vector<Int> out(a.elements().begin(), a.elements().end());
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return make_sorted_set(std::move(out));
}

IntSet without_element(const IntSet& a, Int x) {
  std::vector<Int> out;
  out.reserve(a.size());
  for (Int e : a.elements())
    if (e != x) out.push_back(e);
  if (out.empty()) throw DomainError("removing " + std::to_string(x) +
                                     " would empty " + a.str());
  return make_sorted_set(std::move(out));
}

Int gcd_of(const IntSet& a) noexcept {
  Int g = 0;
  for (Int e : a.elements()) g = std::gcd(g, e - a.min());
  return g;
}

Normalization normalize(const IntSet& a) {
  const Int shift = a.min();
  const Int g = a.size() == 1 ? 1 : gcd_of(a);
  std::vector<Int> out(a.elements().begin(), a.elements().end());
  for (auto& x : out) x = (x - shift) / g;
  return {NormalSet(make_sorted_set(std::move(out))), shift, g};
}

IntSet reflexion(const IntSet& a) {
  if (a.min() != 0) {
    throw DomainError("reflexion requires min 0, got " + a.str());
  }
  std::vector<Int> out(a.elements().rbegin(), a.elements().rend());
  for (auto& x : out) x = a.max() - x;
  return make_sorted_set(std::move(out));
}

NormalSet reflexion(const NormalSet& a) {
  return NormalSet(reflexion(a.set()));
}

IntSet concat(const IntSet& a, const IntSet& b) {
  if (a.min() != 0 || b.min() != 0) {
    throw DomainError("concatenation requires operands with min 0");
  }
  std::vector<Int> out(a.elements().begin(), a.elements().end());
  for (std::size_t i = 1; i < b.size(); ++i) out.push_back(a.max() + b[i]);
  return make_sorted_set(std::move(out));
}

std::vector<Int> holes(const IntSet& a) {
  std::vector<Int> out;
  for (std::size_t i = 1; i < a.size(); ++i)
    for (Int x = a[i - 1] + 1; x < a[i]; ++x) out.push_back(x);
  return out;
}

bool is_progression(const IntSet& a, Int d) {
  if (d <= 0) throw DomainError("progression difference must be positive");
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] - a[i - 1] != d) return false;
  return true;
}

IntSet parse_int_set(std::string_view text) {
  auto fail = [&](const std::string& why) -> DomainError {
    return DomainError("malformed set literal \"" + std::string(text) +
                       "\": " + why);
  };
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}')
    throw fail("expected braces");
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  if (body.empty()) throw fail("empty set");
  std::vector<Int> out;
  while (true) {
    const auto comma = body.find(',');
    const auto token = body.substr(0, comma);
    Int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
      throw fail("bad integer \"" + std::string(token) + "\"");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return IntSet(std::move(out));
}

}  // namespace addcomb

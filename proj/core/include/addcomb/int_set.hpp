#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace addcomb {

using Int = std::int64_t;

/// Largest magnitude accepted for a set element. Keeps 2A - A and 4 max(A)
/// inside the signed 64-bit range.
inline constexpr Int kMaxMagnitude = (Int{1} << 60);

/// Hulls up to this many points carry a packed bit-vector used by sumset.
inline constexpr Int kMaxBitHull = Int{1} << 22;

/// A finite nonempty set of integers, stored as a strictly increasing
/// sequence. When the convex hull is narrow a bit-vector over
/// [min, max] is kept alongside for shift-or sumsets.
///
/// Immutable after construction.
class IntSet {
 public:
  /// Sorts the input. Throws DomainError on empty input, duplicates, or
  /// elements beyond kMaxMagnitude.
  explicit IntSet(std::vector<Int> elements);
  IntSet(std::initializer_list<Int> elements);

  std::span<const Int> elements() const noexcept { return elems_; }
  const std::vector<Int>& vec() const noexcept { return elems_; }

  Int min() const noexcept { return elems_.front(); }
  Int max() const noexcept { return elems_.back(); }
  std::size_t size() const noexcept { return elems_.size(); }
  int k() const noexcept { return static_cast<int>(elems_.size()); }
  /// max - min + 1
  Int length() const noexcept { return max() - min() + 1; }
  Int operator[](std::size_t i) const noexcept { return elems_[i]; }

  bool contains(Int x) const noexcept;

  /// Bits over the hull, bit i <=> min()+i in the set. Empty when the hull
  /// exceeds kMaxBitHull.
  std::span<const std::uint64_t> hull_bits() const noexcept { return bits_; }
  bool has_bits() const noexcept { return !bits_.empty(); }

  std::string str() const;

  friend bool operator==(const IntSet& a, const IntSet& b) noexcept {
    return a.elems_ == b.elems_;
  }
  friend std::strong_ordering operator<=>(const IntSet& a,
                                          const IntSet& b) noexcept {
    return a.elems_ <=> b.elems_;
  }

 private:
  struct Trusted {};
  IntSet(Trusted, std::vector<Int> sorted_unique);
  void build_bits();

  std::vector<Int> elems_;
  std::vector<std::uint64_t> bits_;

  friend IntSet make_sorted_set(std::vector<Int> sorted_unique);
};

/// Builds a set from an already strictly increasing sequence (checked in
/// debug builds only).
IntSet make_sorted_set(std::vector<Int> sorted_unique);

/// A set with min 0 and gcd 1; the singleton {0} is normal.
class NormalSet {
 public:
  /// Throws DomainError if `s` is not in normal form.
  explicit NormalSet(IntSet s);
  NormalSet(std::initializer_list<Int> elements);

  static bool is_normal(const IntSet& s) noexcept;

  const IntSet& set() const noexcept { return set_; }
  operator const IntSet&() const noexcept { return set_; }
  Int max() const noexcept { return set_.max(); }
  std::size_t size() const noexcept { return set_.size(); }
  int k() const noexcept { return set_.k(); }
  std::span<const Int> elements() const noexcept { return set_.elements(); }
  std::string str() const { return set_.str(); }

  friend bool operator==(const NormalSet& a, const NormalSet& b) noexcept {
    return a.set_ == b.set_;
  }
  friend std::strong_ordering operator<=>(const NormalSet& a,
                                          const NormalSet& b) noexcept {
    return a.set_ <=> b.set_;
  }

 private:
  IntSet set_;
};

struct Normalization {
  NormalSet set;
  Int shift;
  Int scale;
};

/// {a + b : a in A, b in B}
IntSet sumset(const IntSet& a, const IntSet& b);
/// A - B = sumset(A, -B)
IntSet difference(const IntSet& a, const IntSet& b);
/// |2A|, computed without materializing the element list when possible.
Int doubling(const IntSet& a);
/// |A ∩ B|
std::size_t intersection_size(const IntSet& a, const IntSet& b);

IntSet negate(const IntSet& a);
IntSet translate(const IntSet& a, Int t);
/// {f * a : a in A}, f != 0
IntSet dilate(const IntSet& a, Int f);
/// A ∪ {x}
IntSet with_element(const IntSet& a, Int x);
/// A \ {x}; throws DomainError if that would leave the set empty.
IntSet without_element(const IntSet& a, Int x);

Int gcd_of(const IntSet& a) noexcept;

/// (A - min A) / gcd(A - min A), with the affine data to get back.
Normalization normalize(const IntSet& a);
/// -A + max(A). Requires min(A) = 0.
IntSet reflexion(const IntSet& a);
NormalSet reflexion(const NormalSet& a);
/// A ∪ (max(A) + B). Both operands must have min 0.
IntSet concat(const IntSet& a, const IntSet& b);
/// [min A, max A] \ A, increasing.
std::vector<Int> holes(const IntSet& a);
/// True iff A = {a, a+d, ..., a+(k-1)d}; singletons qualify for every d.
bool is_progression(const IntSet& a, Int d);

/// Parses "{0,2,3,6}" (whitespace tolerated, any order, no duplicates).
IntSet parse_int_set(std::string_view text);

}  // namespace addcomb

#pragma once

// Exact rank over the rationals via fraction-free row reduction. Each stored
// row is kept primitive (gcd of entries 1), so entries stay small for the
// {-2..2} relation vectors this is fed with.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "addcomb/errors.hpp"
#include "addcomb/int_set.hpp"

namespace addcomb::detail {

template <class Row>
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols), pivot_(cols, -1) {}

  /// Reduces `row` against the basis; stores it and returns true when it is
  /// independent of the rows seen so far.
  bool insert(Row row) {
    for (int col = 0; col < cols_; ++col) {
      if (row[col] == 0) continue;
      const int p = pivot_[col];
      if (p < 0) {
        make_primitive(row);
        pivot_[col] = static_cast<int>(rows_.size());
        rows_.push_back(row);
        return true;
      }
      const Row& piv = rows_[p];
      const Int f = piv[col];
      const Int g = row[col];
      for (int j = col; j < cols_; ++j) {
        __int128 v = static_cast<__int128>(row[j]) * f -
                     static_cast<__int128>(piv[j]) * g;
        if (v > INT64_MAX || v < INT64_MIN) {
          throw CapacityError("exact rank computation overflowed");
        }
        row[j] = static_cast<Int>(v);
      }
      make_primitive(row);
    }
    return false;
  }

  int rank() const noexcept { return static_cast<int>(rows_.size()); }

 private:
  void make_primitive(Row& row) const {
    Int g = 0;
    for (int j = 0; j < cols_; ++j) g = std::gcd(g, std::llabs(row[j]));
    if (g > 1)
      for (int j = 0; j < cols_; ++j) row[j] /= g;
  }

  int cols_;
  std::vector<int> pivot_;
  std::vector<Row> rows_;
};

}  // namespace addcomb::detail

#include "addcomb/dimension.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <type_traits>

#include "addcomb/errors.hpp"
#include "echelon.hpp"

namespace addcomb {

namespace {

template <class Row>
int grouped_rank(std::span<const Int> a) {
  const int k = static_cast<int>(a.size());
  struct PairSum {
    Int sum;
    int i, j;
  };
  std::vector<PairSum> pairs;
  pairs.reserve(static_cast<std::size_t>(k * (k + 1) / 2));
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) pairs.push_back({a[i] + a[j], i, j});
  std::sort(pairs.begin(), pairs.end(), [](const PairSum& x, const PairSum& y) {
    return std::tie(x.sum, x.i, x.j) < std::tie(y.sum, y.i, y.j);
  });

  detail::RowEchelon<Row> basis(k);
  const int ceiling = k - 2;  // relation vectors are orthogonal to 1 and A
  std::size_t g = 0;
  while (g < pairs.size() && basis.rank() < ceiling) {
    std::size_t h = g + 1;
    while (h < pairs.size() && pairs[h].sum == pairs[g].sum) ++h;
    for (std::size_t q = g + 1; q < h && basis.rank() < ceiling; ++q) {
      Row row{};
      if constexpr (!std::is_same_v<Row, std::array<Int, 16>>) row.assign(k, 0);
      row[pairs[g].i] += 1;
      row[pairs[g].j] += 1;
      row[pairs[q].i] -= 1;
      row[pairs[q].j] -= 1;
      basis.insert(row);
    }
    g = h;
  }
  return basis.rank();
}

}  // namespace

RelationBasis relation_rank(const IntSet& a) {
  if (a.size() < 2) throw DomainError("relation rank requires |A| >= 2");
  const int k = a.k();
  RelationBasis out;
  out.k = k;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) pairs.emplace_back(i, j);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto [i, j] = pairs[p];
      const auto [r, s] = pairs[q];
      if (a[i] + a[j] == a[r] + a[s]) out.relations.push_back({i, j, r, s});
    }
  }
  detail::RowEchelon<std::vector<Int>> basis(k);
  for (const auto& q : out.relations) {
    std::vector<Int> row(static_cast<std::size_t>(k), 0);
    row[q.i] += 1;
    row[q.j] += 1;
    row[q.r] -= 1;
    row[q.s] -= 1;
    basis.insert(std::move(row));
  }
  out.rank = basis.rank();
  return out;
}

int relation_rank_value(std::span<const Int> sorted) {
  if (sorted.size() < 2 || sorted.size() > 64) {
    throw DomainError("relation_rank_value expects 2 <= |A| <= 64");
  }
  if (sorted.size() <= 16) return grouped_rank<std::array<Int, 16>>(sorted);
  return grouped_rank<std::vector<Int>>(sorted);
}

int additive_dim(const IntSet& a) {
  if (a.size() < 2) throw DomainError("additive dimension requires |A| >= 2");
  const int rank = a.size() <= 64 ? relation_rank_value(a.elements())
                                  : relation_rank(a).rank;
  return a.k() - 1 - rank;
}

IntSet extension_candidates(const IntSet& a) {
  if (!NormalSet::is_normal(a)) {
    throw DomainError("extension candidates require a normal set, got " +
                      a.str());
  }
  if (a.size() < 2 || additive_dim(a) != 1) {
    throw DomainError("extension candidates require a one-dimensional set, "
                      "got " + a.str());
  }
  const IntSet two_a = sumset(a, a);
  std::vector<Int> out;
  for (Int y = a.max() + 1; y <= 2 * a.max(); ++y) {
    for (Int e : a.elements()) {
      if (two_a.contains(y + e)) {
        out.push_back(y);
        break;
      }
    }
  }
  return IntSet(std::move(out));
}

std::optional<FreimanMap> f_isomorphic(const IntSet& a, const IntSet& b) {
  if (a.size() > kIsomorphismCap || b.size() > kIsomorphismCap) {
    throw CapacityError("Freiman isomorphism search is capped at " +
                        std::to_string(kIsomorphismCap) + " elements");
  }
  if (a.size() != b.size()) return std::nullopt;
  if (doubling(a) != doubling(b)) return std::nullopt;

  const int k = a.k();
  std::array<std::array<Int, kIsomorphismCap>, kIsomorphismCap> sa{}, sb{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      sa[i][j] = a[i] + a[j];
      sb[i][j] = b[i] + b[j];
    }

  std::array<int, kIsomorphismCap> image{};
  std::array<bool, kIsomorphismCap> used{};

  // Every quadruple among indices 0..p that involves p.
  auto consistent = [&](int p) {
    for (int i = 0; i <= p; ++i) {
      for (int r = 0; r <= p; ++r) {
        for (int s = r; s <= p; ++s) {
          const bool in_a = sa[i][p] == sa[r][s];
          const bool in_b = sb[image[i]][image[p]] == sb[image[r]][image[s]];
          if (in_a != in_b) return false;
        }
      }
    }
    return true;
  };

  auto search = [&](auto&& self, int p) -> bool {
    if (p == k) return true;
    for (int q = 0; q < k; ++q) {
      if (used[q]) continue;
      image[p] = q;
      if (!consistent(p)) continue;
      used[q] = true;
      if (self(self, p + 1)) return true;
      used[q] = false;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  FreimanMap map;
  for (int i = 0; i < k; ++i) map.emplace_back(a[i], b[image[i]]);
  return map;
}

}  // namespace addcomb

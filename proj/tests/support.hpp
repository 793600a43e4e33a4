// Test-only oracles and generators. Nothing here calls into the library's
// arithmetic paths: determinants are by cofactor expansion on int64, gcds by
// std::gcd, partitions by brute-force surjection enumeration.
#pragma once

#include "drchi/dr_matrix.hpp"
#include "drchi/exact_math.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace drchi::testing {

using SmallMatrix = std::vector<std::vector<std::int64_t>>;

inline DRMatrix to_dr(const SmallMatrix& rows) {
  std::vector<std::vector<BigInt>> big;
  for (const auto& row : rows) {
    big.emplace_back();
    for (auto v : row) big.back().emplace_back(static_cast<long>(v));
  }
  return DRMatrix::validate(big);
}

inline IntMatrix to_int(const SmallMatrix& rows) {
  std::vector<std::vector<BigInt>> big;
  for (const auto& row : rows) {
    big.emplace_back();
    for (auto v : row) big.back().emplace_back(static_cast<long>(v));
  }
  return IntMatrix::from_rows(big);
}

inline SmallMatrix to_small(const IntMatrix& m) {
  SmallMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
  return out;
}

inline std::int64_t cofactor_det(const SmallMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    SmallMatrix sub;
    for (std::size_t i = 1; i < n; ++i) {
      sub.emplace_back();
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) sub.back().push_back(m[i][j]);
    }
    const std::int64_t term = m[0][col] * cofactor_det(sub);
    det += (col % 2 == 0) ? term : -term;
  }
  return det;
}

inline SmallMatrix small_mul(const SmallMatrix& a, const SmallMatrix& b) {
  SmallMatrix out(a.size(), std::vector<std::int64_t>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// all subsets of {0..n-1} of size k, each sorted
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

inline std::int64_t oracle_gcd_minors(const SmallMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  std::int64_t g = 0;
  for (const auto& rows : subsets(a.size(), k))
    for (const auto& cols : subsets(a.front().size(), k)) {
      SmallMatrix sub;
      for (auto i : rows) {
        sub.emplace_back();
        for (auto j : cols) sub.back().push_back(a[i][j]);
      }
      g = std::gcd(g, cofactor_det(sub));
    }
  return g;
}

/// Partitions of {0..n-1} into exactly k blocks as canonical label vectors,
/// found by enumerating all k^n maps and keeping the surjective ones in
/// first-occurrence relabeling.
inline std::set<std::vector<std::size_t>> brute_force_partitions(std::size_t n, std::size_t k) {
  std::set<std::vector<std::size_t>> out;
  if (k == 0 || k > n) return out;
  std::vector<std::size_t> f(n, 0);
  while (true) {
    std::vector<std::size_t> relabel(k, k), canon(n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (relabel[f[i]] == k) relabel[f[i]] = next++;
      canon[i] = relabel[f[i]];
    }
    if (next == k) out.insert(canon);
    std::size_t i = 0;
    while (i < n && ++f[i] == k) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

inline std::uint64_t stirling2(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 2, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return k <= n ? s[n][k] : 0;
}

inline std::int64_t small_factorial(std::int64_t m) {
  std::int64_t f = 1;
  for (std::int64_t i = 2; i <= m; ++i) f *= i;
  return f;
}

/// Independent closed-formula evaluation on int64: returns 12 * chi.
inline std::int64_t oracle_twelve_chi(const SmallMatrix& a) {
  const std::size_t r = a.size(), n = a.front().size();
  std::int64_t total = 0;
  for (std::size_t k = 0; k <= r; ++k) {
    for (const auto& labels : brute_force_partitions(n, k + 1)) {
      SmallMatrix contracted(r, std::vector<std::int64_t>(k + 1, 0));
      std::vector<std::int64_t> sizes(k + 1, 0);
      for (std::size_t j = 0; j < n; ++j) {
        ++sizes[labels[j]];
        for (std::size_t i = 0; i < r; ++i) contracted[i][labels[j]] += a[i][j];
      }
      std::int64_t weight = 1;
      for (auto s : sizes) weight *= small_factorial(s - 1);
      const std::int64_t g = oracle_gcd_minors(contracted, k);
      total += (k % 2 == 0 ? 1 : -1) * weight * g * g;
    }
  }
  return (n % 2 == 0) ? total : -total;
}

inline ExactRational twelfths(std::int64_t twelve_chi) { return {BigInt(static_cast<long>(twelve_chi)), 12}; }

// The three example families in closed form. Each
// returns 12 * chi.
inline std::int64_t family_two_by_three(const SmallMatrix& m) {
  const auto& a = m[0];
  const auto& b = m[1];
  auto g = [](std::int64_t x, std::int64_t y) { return std::gcd(x, y); };
  const std::int64_t cross = a[0] * b[1] - a[1] * b[0];
  return -2 + g(a[0], b[0]) * g(a[0], b[0]) + g(a[1], b[1]) * g(a[1], b[1]) +
         g(a[2], b[2]) * g(a[2], b[2]) - cross * cross;
}

inline std::int64_t family_two_by_four(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  return 6 - 4 * a * a - 4 * b * b - 2 * g * g + 4 * (a * b) * (a * b);
}

inline std::int64_t family_three_by_four(std::int64_t a, std::int64_t b, std::int64_t c) {
  auto sq = [](std::int64_t x) { return x * x; };
  auto g2 = [](std::int64_t x, std::int64_t y) { return std::gcd(x, y); };
  auto g3 = [](std::int64_t x, std::int64_t y, std::int64_t z) { return std::gcd(std::gcd(x, y), z); };
  return 6 - 2 * sq(a) - sq(b) - 2 * sq(c) - 2 * sq(g2(a, b)) - sq(g2(a, c)) - 2 * sq(g2(b, c)) -
         sq(g3(a, b, c)) + sq(a * b) + sq(a * c) + sq(b * c) + 3 * sq(g3(a * b, a * c, b * c)) -
         sq(a * b * c);
}

/// The 3x4 chain family with its rank-two slice expanded partition by
/// partition: the six three-block partitions contribute (ab)^2, (ac)^2,
/// (bc)^2, gcd(ab,ac,bc)^2, gcd(ab,ac)^2 and gcd(ac,bc)^2. The closed form
/// above folds the last three into 3 gcd(ab,ac,bc)^2, which only holds when
/// they coincide.
inline std::int64_t family_three_by_four_expanded(std::int64_t a, std::int64_t b, std::int64_t c) {
  auto sq = [](std::int64_t x) { return x * x; };
  auto g2 = [](std::int64_t x, std::int64_t y) { return std::gcd(x, y); };
  auto g3 = [](std::int64_t x, std::int64_t y, std::int64_t z) { return std::gcd(std::gcd(x, y), z); };
  return 6 - 2 * sq(a) - sq(b) - 2 * sq(c) - 2 * sq(g2(a, b)) - sq(g2(a, c)) - 2 * sq(g2(b, c)) -
         sq(g3(a, b, c)) + sq(a * b) + sq(a * c) + sq(b * c) + sq(g3(a * b, a * c, b * c)) +
         sq(g2(a * b, a * c)) + sq(g2(a * c, b * c)) - sq(a * b * c);
}

inline SmallMatrix family_two_by_four_matrix(std::int64_t a, std::int64_t b) {
  return {{a, -a, 0, 0}, {0, 0, b, -b}};
}

inline SmallMatrix family_three_by_four_matrix(std::int64_t a, std::int64_t b, std::int64_t c) {
  return {{a, -a, 0, 0}, {0, b, -b, 0}, {0, 0, c, -c}};
}

/// Random r x n matrix, entries in [lo, hi], each row summing to zero. The
/// last entry of each row absorbs the sum; rows are resampled until it lands
/// in range.
inline SmallMatrix random_dr(std::mt19937_64& rng, std::size_t r, std::size_t n, int lo = -3,
                             int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  SmallMatrix out(r, std::vector<std::int64_t>(n, 0));
  for (auto& row : out) {
    if (n == 1) continue;
    while (true) {
      std::int64_t sum = 0;
      for (std::size_t j = 0; j + 1 < n; ++j) sum += row[j] = dist(rng);
      row[n - 1] = -sum;
      if (-sum >= lo && -sum <= hi) break;
    }
  }
  return out;
}

/// Product of `steps` random elementary unimodular matrices (row addition
/// with multiplier in [-2, 2], row swap, row negation).
inline SmallMatrix random_unimodular(std::mt19937_64& rng, std::size_t r, int steps = 6) {
  SmallMatrix m(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> row(0, r - 1);
  std::uniform_int_distribution<int> kind(0, 2), mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    SmallMatrix e(r, std::vector<std::int64_t>(r, 0));
    for (std::size_t i = 0; i < r; ++i) e[i][i] = 1;
    const std::size_t i = row(rng), j = row(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) e[i][j] = mult(rng);
        break;
      case 1:
        std::swap(e[i], e[j]);
        break;
      default:
        e[i][i] = -1;
    }
    m = small_mul(e, m);
  }
  return m;
}

}  // namespace drchi::testing

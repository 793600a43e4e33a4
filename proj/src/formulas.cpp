#include "drchi/formulas.hpp"

#include "partition_term.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace drchi {

ExactRational harer_zagier(std::size_t n) {
  if (n == 0) throw std::invalid_argument("harer_zagier: n must be positive");
  BigInt num = factorial(n - 1);
  if (n % 2 == 1) num = -num;
  return {num, 12};
}

ExactRational rank_one_chi(std::span<const BigInt> a) {
  if (a.empty()) throw std::invalid_argument("rank_one_chi: empty vector");
  BigInt sum = 0, squares = 0;
  for (const auto& v : a) {
    sum += v;
    squares += v * v;
  }
  if (sum != 0) throw RowSumError(1);
  const std::size_t n = a.size();
  BigInt num = factorial(n - 1) * (squares - 2);
  if ((n - 1) % 2 == 1) num = -num;
  return {num, 24};
}

BigInt closed_chi_slice(const DRMatrix& a, std::size_t k) {
  if (k > a.rank() || k + 1 > a.markings()) return 0;
  BigInt total = 0;
  for (PartitionEnumerator it(a.markings(), k + 1); !it.done(); it.next())
    total += detail::partition_term(a.entries(), it.labels(), k);
  return k % 2 == 0 ? total : BigInt(-total);
}

ExactRational closed_chi_serial(const DRMatrix& a) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= detail::top_slice(a); ++k) total += closed_chi_slice(a, k);
  if (a.markings() % 2 == 1) total = -total;
  return {total, 12};
}

ExactRational leading_term_via_partitions(const DRMatrix& a) {
  const std::size_t r = a.rank();
  const std::size_t n = a.markings();
  if (n <= r) return 0;
  BigInt total = closed_chi_slice(a, r);
  if (n % 2 == 1) total = -total;
  return {total, 12};
}

ExactRational leading_term(const DRMatrix& a) {
  const std::size_t r = a.rank();
  const std::size_t n = a.markings();
  if (n <= r) return 0;
  std::vector<std::size_t> rows(r);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  std::vector<std::size_t> cols(rows);
  BigInt squares = 0;
  while (true) {
    const BigInt m = minor(a.entries(), rows, cols);
    squares += m * m;
    std::size_t i = r;
    while (i > 0 && cols[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < r; ++j) cols[j] = cols[j - 1] + 1;
  }
  BigInt num = factorial(n - 1) * squares;
  if ((n + r) % 2 == 1) num = -num;
  return {num, BigInt(12) * factorial(r + 1)};
}

PowerSumSides power_sum_identity_check(std::span<const BigInt> a, std::size_t m) {
  const std::size_t n = a.size();
  if (m < 1 || m + 1 > n) throw std::invalid_argument("power_sum_identity_check: need 1 <= m <= n-1");
  BigInt sum = 0, squares = 0;
  for (const auto& v : a) {
    sum += v;
    squares += v * v;
  }
  if (sum != 0) throw RowSumError(1);

  BigInt lhs = 0;
  std::vector<std::size_t> subset(m);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  while (true) {
    BigInt partial = 0;
    for (std::size_t i : subset) partial += a[i];
    lhs += partial * partial;
    std::size_t i = m;
    while (i > 0 && subset[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < m; ++j) subset[j] = subset[j - 1] + 1;
  }
  return {lhs, binomial(n - 2, m - 1) * squares};
}

}  // namespace drchi

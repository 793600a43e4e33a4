#pragma once

#include "drchi/dr_matrix.hpp"
#include "drchi/exact_math.hpp"

#include <cstddef>
#include <span>

namespace drchi {

/// chi(M_{1,n}) = (-1)^n (n-1)! / 12. Throws std::invalid_argument for n == 0.
ExactRational harer_zagier(std::size_t n);

/// Rank-one closed formula (-1)^(n-1) (n-1)!/24 * (sum a_i^2 - 2).
/// Throws std::invalid_argument if `a` is empty or does not sum to zero.
ExactRational rank_one_chi(std::span<const BigInt> a);

/// Higher rank closed formula: a signed sum over set partitions of the
/// columns of squared gcds of minors of the contracted matrix.
///
/// This is the OpenMP kernel. The partition stream for each block count is
/// split by restricted-growth prefix and the chunks are summed as integers
/// over the common denominator 12, so the result does not depend on the
/// thread count or chunking.
ExactRational closed_chi(const DRMatrix& a);

/// Single-threaded reference for closed_chi, kept for testing and
/// benchmarking.
ExactRational closed_chi_serial(const DRMatrix& a);

/// Sum of (-1)^k prod (|I_j|-1)! G_{kxk}(A_I)^2 over partitions with k+1
/// blocks, i.e. 12 (-1)^n times the k-th slice of closed_chi. Exposed for the
/// leading-term check and for tests that split the formula by k.
BigInt closed_chi_slice(const DRMatrix& a, std::size_t k);

/// Leading term via squared r x r minors of A itself:
/// (-1)^(n+r)/12 * (n-1)!/(r+1)! * sum_{|I|=r} M_I(A)^2. Zero when n <= r.
ExactRational leading_term(const DRMatrix& a);

/// The k = r slice of closed_chi, computed from partitions directly.
ExactRational leading_term_via_partitions(const DRMatrix& a);

struct PowerSumSides {
  BigInt lhs;  ///< sum over m-subsets I of (sum_{i in I} a_i)^2
  BigInt rhs;  ///< C(n-2, m-1) * sum a_i^2
};

/// Evaluates both sides of the quadratic power-sum identity independently.
/// Throws std::invalid_argument unless 1 <= m <= n-1 and sum a_i == 0.
PowerSumSides power_sum_identity_check(std::span<const BigInt> a, std::size_t m);

}  // namespace drchi

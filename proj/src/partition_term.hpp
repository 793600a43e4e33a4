#pragma once

#include "drchi/dr_matrix.hpp"
#include "drchi/partitions.hpp"

#include <span>

namespace drchi::detail {

// prod (|I_j|-1)! * G_{kxk}(A_I)^2 for the partition with k+1 blocks given by
// `labels`; unsigned.
inline BigInt partition_term(const IntMatrix& a, std::span<const std::size_t> labels,
                             std::size_t k) {
  const IntMatrix contracted = contract_labels(a, labels, k + 1);
  const BigInt g = gcd_minors(contracted, k);
  if (g == 0) return 0;
  return block_factorial_weight(labels, k + 1) * g * g;
}

// Largest k with a nonzero slice: k <= r and k + 1 <= n.
inline std::size_t top_slice(const DRMatrix& a) {
  return std::min(a.rank(), a.markings() - 1);
}

}  // namespace drchi::detail

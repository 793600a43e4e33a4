#include "drchi/formulas.hpp"

#include "partition_term.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drchi {

namespace {

// Bell(5) = 52 prefixes per block count at most.
constexpr std::size_t kSplitDepth = 5;

struct Chunk {
  std::size_t k;
  std::vector<std::size_t> prefix;
};

}  // namespace

ExactRational closed_chi(const DRMatrix& a) {
  const std::size_t n = a.markings();
  std::vector<Chunk> chunks;
  for (std::size_t k = 0; k <= detail::top_slice(a); ++k)
    for (auto& prefix : partition_prefixes(n, k + 1, kSplitDepth))
      chunks.push_back({k, std::move(prefix)});

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::vector<BigInt> partial(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    BigInt local = 0;
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(chunks.size()); ++c) {
      const Chunk& chunk = chunks[static_cast<std::size_t>(c)];
      BigInt sum = 0;
      for (PartitionEnumerator it(n, chunk.k + 1, chunk.prefix); !it.done(); it.next())
        sum += detail::partition_term(a.entries(), it.labels(), chunk.k);
      if (chunk.k % 2 == 0)
        local += sum;
      else
        local -= sum;
    }
    partial[static_cast<std::size_t>(tid)] = std::move(local);
  }

  BigInt total = 0;
  for (const auto& p : partial) total += p;
  if (n % 2 == 1) total = -total;
  return {total, 12};
}

}  // namespace drchi

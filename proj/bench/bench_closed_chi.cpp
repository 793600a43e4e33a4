// Serial reference vs OpenMP kernel for the closed formula, plus the
// recursion with and without memoization.
//
//   bench_closed_chi [max_markings] [repeats]
#include "drchi/formulas.hpp"
#include "drchi/recursion.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace drchi;

namespace {

DRMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t n) {
  std::uniform_int_distribution<long> dist(-5, 5);
  IntMatrix m(r, n);
  for (std::size_t i = 0; i < r; ++i) {
    BigInt sum = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      m(i, j) = dist(rng);
      sum += m(i, j);
    }
    m(i, n - 1) = -sum;
  }
  return DRMatrix::validate(std::move(m));
}

template <typename F>
double time_ms(F&& f, int repeats) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() /
         repeats;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 9;
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::cout << "threads " << threads << "\n";
  std::cout << "r  n  serial_ms  omp_ms  speedup  recursion_ms  recursion_memo_ms  agree\n";

  std::mt19937_64 rng(1);
  for (std::size_t r = 1; r <= 3; ++r)
    for (std::size_t n = 4; n <= max_n; ++n) {
      const auto a = random_matrix(rng, r, n);
      ExactRational serial, parallel, rec, memo;
      const double serial_ms = time_ms([&] { serial = closed_chi_serial(a); }, repeats);
      const double omp_ms = time_ms([&] { parallel = closed_chi(a); }, repeats);
      double rec_ms = -1.0;
      if (n <= 8) rec_ms = time_ms([&] { rec = recursive_chi(a); }, 1);
      const double memo_ms = time_ms(
          [&] {
            EvalCache cache;
            memo = recursive_chi(a, &cache);
          },
          1);
      const bool agree = serial == parallel && memo == serial && (rec_ms < 0 || rec == serial);
      std::cout << r << "  " << n << "  " << serial_ms << "  " << omp_ms << "  "
                << serial_ms / omp_ms << "  " << rec_ms << "  " << memo_ms << "  "
                << (agree ? "yes" : "NO") << "\n";
    }
}

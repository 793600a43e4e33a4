#include "drchi/recursion.hpp"

#include "drchi/formulas.hpp"

#include <chrono>
#include <mutex>
#include <stdexcept>

namespace drchi {

std::optional<ExactRational> EvalCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void EvalCache::insert(const std::string& key, const ExactRational& value) {
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
}

std::size_t EvalCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

std::vector<BigInt> branch_vector(std::span<const BigInt> a, std::size_t i) {
  if (a.size() < 2 || i + 1 >= a.size())
    throw std::out_of_range("branch_vector: index " + std::to_string(i) + " out of range");
  std::vector<BigInt> out(a.begin(), a.end() - 1);
  out[i] += a.back();
  return out;
}

namespace {

ExactRational rank_one_step(std::span<const BigInt> a, EvalCache* cache);
ExactRational general_step(const DRMatrix& a, EvalCache* cache);

std::string cache_key(const DRMatrix& a, const EvalCache& cache) {
  return cache.mode() == KeyMode::kNormalized ? normalized_key(a) : canonical_key(a);
}

DRMatrix row_matrix(std::span<const BigInt> a) {
  IntMatrix m(1, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) m(0, j) = a[j];
  return DRMatrix::validate(std::move(m));
}

ExactRational dispatch(const DRMatrix& a, EvalCache* cache) {
  if (a.markings() == 1) return harer_zagier(1);
  if (a.rank() == 1) return rank_one_step(a.entries().row(0), cache);
  return general_step(a, cache);
}

// chi(a) = a_last^2 chi(M_{1,n}) - sum_i chi(a(i)); the key is the raw vector.
ExactRational rank_one_step(std::span<const BigInt> a, EvalCache* cache) {
  const std::size_t n = a.size() - 1;
  if (n == 0) return harer_zagier(1);
  std::string key;
  if (cache) {
    key = cache_key(row_matrix(a), *cache);
    if (auto hit = cache->find(key)) return *hit;
  }
  const BigInt& pivot = a.back();
  ExactRational result = harer_zagier(n).scaled(pivot * pivot);
  for (std::size_t i = 0; i < n; ++i) {
    const auto branch = branch_vector(a, i);
    result -= rank_one_step(branch, cache);
  }
  if (cache) cache->insert(key, result);
  return result;
}

// Reduce to special form, then
//   chi(A) = a_last^2 chi(B) - sum_i chi([a(i); B]).
ExactRational general_step(const DRMatrix& input, EvalCache* cache) {
  const DRMatrix reduced = reduce_special_form(input).reduced;
  std::string key;
  if (cache) {
    key = cache_key(reduced, *cache);
    if (auto hit = cache->find(key)) return *hit;
  }

  const std::size_t r = reduced.rank();
  const std::size_t n = reduced.markings() - 1;
  const auto top = reduced.entries().row(0);
  const BigInt& pivot = top[n];

  IntMatrix lower(r - 1, n);
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) lower(i - 1, j) = reduced(i, j);

  ExactRational result = 0;
  if (pivot != 0) {
    // r >= 2 here, so B has at least one row.
    const DRMatrix b = DRMatrix::validate(lower);
    result = dispatch(b, cache).scaled(pivot * pivot);
  }

  IntMatrix stacked(r, n);
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = lower(i - 1, j);
  for (std::size_t i = 0; i < n; ++i) {
    const auto branch = branch_vector(top, i);
    for (std::size_t j = 0; j < n; ++j) stacked(0, j) = branch[j];
    result -= dispatch(DRMatrix::validate(stacked), cache);
  }

  if (cache) cache->insert(key, result);
  return result;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ExactRational recursive_chi(const DRMatrix& a, EvalCache* cache) { return dispatch(a, cache); }

EvalReport evaluate(const DRMatrix& a, const MethodSelection& methods, EvalCache* cache) {
  EvalReport report;
  report.input = render(a.entries());
  report.rank = a.rank();
  report.markings = a.markings();

  if (methods.closed) {
    const auto start = std::chrono::steady_clock::now();
    report.closed = closed_chi(a);
    report.closed_ms = elapsed_ms(start);
  }
  if (methods.recursion) {
    const std::uint64_t hits0 = cache ? cache->hits() : 0;
    const std::uint64_t misses0 = cache ? cache->misses() : 0;
    const auto start = std::chrono::steady_clock::now();
    report.recursion = recursive_chi(a, cache);
    report.recursion_ms = elapsed_ms(start);
    if (cache) {
      report.cache_hits = cache->hits() - hits0;
      report.cache_misses = cache->misses() - misses0;
    }
  }
  if (methods.rank_one && a.rank() == 1) {
    const auto start = std::chrono::steady_clock::now();
    report.rank_one = rank_one_chi(a.entries().row(0));
    report.rank_one_ms = elapsed_ms(start);
  }
  if (methods.leading_term) report.leading = leading_term(a);

  std::optional<ExactRational> first;
  for (const auto* value : {&report.closed, &report.recursion, &report.rank_one}) {
    if (!value->has_value()) continue;
    if (!first)
      first = **value;
    else if (!(**value == *first))
      report.agree = false;
  }
  return report;
}

EvalReport cross_validate(const DRMatrix& a) {
  EvalCache cache;
  return evaluate(a, {.closed = true, .recursion = true, .rank_one = true, .leading_term = false},
                  &cache);
}

}  // namespace drchi

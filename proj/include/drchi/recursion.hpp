#pragma once

#include "drchi/dr_matrix.hpp"
#include "drchi/exact_math.hpp"

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace drchi {

enum class KeyMode {
  /// canonical_key of the (reduced) matrix
  kRaw,
  /// normalized_key: columns sorted, then reduced
  kNormalized,
};

/// Memo table for recursive_chi. Safe to share between threads: lookups take
/// a shared lock and inserts are write-once (the first value stored for a key
/// wins; racing writers compute the same value).
class EvalCache {
 public:
  explicit EvalCache(KeyMode mode = KeyMode::kRaw) : mode_(mode) {}

  KeyMode mode() const { return mode_; }
  std::optional<ExactRational> find(const std::string& key) const;
  void insert(const std::string& key, const ExactRational& value);

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }
  std::size_t size() const;

 private:
  KeyMode mode_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, ExactRational> table_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// (a_0, ..., a_{i-1}, a_i + a_n, a_{i+1}, ..., a_{n-1}) for a of length n+1
/// and a zero-based index i < n. Throws std::out_of_range otherwise.
std::vector<BigInt> branch_vector(std::span<const BigInt> a, std::size_t i);

/// Euler characteristic by the geometric recursion on the last marking.
///
/// Each step reduces A to special form, reads the pivot a_{n+1} and the
/// lower-left block B, and recurses on B (one rank lower) and on the n
/// matrices [a(i); B] (one marking fewer). Rank-one inputs skip the reduction.
/// Recursion depth is bounded by n + r. Pass nullptr to disable memoization.
ExactRational recursive_chi(const DRMatrix& a, EvalCache* cache = nullptr);

/// Per-method results for one input. Methods that were not run are empty.
struct EvalReport {
  std::string input;
  std::size_t rank = 0;
  std::size_t markings = 0;
  std::optional<ExactRational> closed;
  std::optional<ExactRational> recursion;
  std::optional<ExactRational> rank_one;
  std::optional<ExactRational> leading;
  /// true iff all computed chi values (not the leading term) are equal
  bool agree = true;
  double closed_ms = 0.0;
  double recursion_ms = 0.0;
  double rank_one_ms = 0.0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
};

struct MethodSelection {
  bool closed = true;
  bool recursion = false;
  /// ignored for rank > 1
  bool rank_one = false;
  bool leading_term = false;
};

/// Runs the selected methods. `cache` may be shared across calls; the report
/// records the hit/miss deltas of this call.
EvalReport evaluate(const DRMatrix& a, const MethodSelection& methods, EvalCache* cache);

/// Runs closed_chi, recursive_chi and (for rank one) rank_one_chi.
/// Disagreement is reported through EvalReport::agree, never thrown.
EvalReport cross_validate(const DRMatrix& a);

}  // namespace drchi

#pragma once

#include "drchi/exact_math.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace drchi {

/// A set partition of {0, ..., n-1}. Blocks are sorted internally and ordered
/// by ascending minimum element. Indices are zero-based; rendering is
/// one-based.
class SetPartition {
 public:
  /// Validates disjointness, nonemptiness and coverage, then canonicalizes.
  /// Throws std::invalid_argument on a malformed partition.
  SetPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

  /// Builds the partition whose block labels are given as a restricted growth
  /// string (labels[0] == 0, labels[i] <= max(labels[0..i)) + 1).
  static SetPartition from_labels(std::span<const std::size_t> labels);

  static SetPartition singletons(std::size_t n);

  std::size_t ground_size() const { return n_; }
  std::size_t size() const { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

  /// label of each element, i.e. the index of the block containing it
  std::vector<std::size_t> labels() const;

  /// e.g. "{{1,2},{3}}"
  std::string to_string() const;

  bool operator==(const SetPartition&) const = default;

 private:
  SetPartition() = default;

  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// Streams every partition of an n-set into exactly `blocks` blocks, in
/// lexicographic order of restricted growth strings. Only O(n) state is held.
///
/// An optional fixed prefix restricts the stream to the strings beginning
/// with that prefix; disjoint prefixes give disjoint sub-streams, which is
/// what the parallel kernels use to split work.
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::size_t n, std::size_t blocks,
                      std::span<const std::size_t> prefix = {});

  bool done() const { return done_; }
  /// Current restricted growth string; valid while !done().
  std::span<const std::size_t> labels() const { return labels_; }
  SetPartition current() const { return SetPartition::from_labels(labels_); }
  void next();

 private:
  bool fill_from(std::size_t position);

  std::size_t n_;
  std::size_t blocks_;
  std::size_t fixed_;
  std::vector<std::size_t> labels_;
  // prefix_max_[i] = max(labels_[0..i])
  std::vector<std::size_t> prefix_max_;
  bool done_ = false;
};

/// All restricted growth prefixes of length min(depth, n) that extend to at
/// least one partition of an n-set into exactly `blocks` blocks.
std::vector<std::vector<std::size_t>> partition_prefixes(std::size_t n,
                                                         std::size_t blocks,
                                                         std::size_t depth);

void for_each_partition(std::size_t n, std::size_t blocks,
                        const std::function<void(std::span<const std::size_t>)>& visit);

/// Product over blocks of (|block| - 1)!.
BigInt block_factorial_weight(const SetPartition& partition);
BigInt block_factorial_weight(std::span<const std::size_t> labels, std::size_t blocks);

}  // namespace drchi

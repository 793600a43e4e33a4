#include "drchi/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace drchi {

SetPartition::SetPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n, false);
  for (auto& block : blocks_) {
    if (block.empty()) throw std::invalid_argument("SetPartition: empty block");
    for (std::size_t e : block) {
      if (e >= n) throw std::invalid_argument("SetPartition: element out of range");
      if (seen[e]) throw std::invalid_argument("SetPartition: blocks overlap");
      seen[e] = true;
    }
    std::sort(block.begin(), block.end());
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("SetPartition: blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

SetPartition SetPartition::from_labels(std::span<const std::size_t> labels) {
  SetPartition out;
  out.n_ = labels.size();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t label = labels[i];
    if (label > out.blocks_.size())
      throw std::invalid_argument("SetPartition: not a restricted growth string");
    if (label == out.blocks_.size()) out.blocks_.emplace_back();
    out.blocks_[label].push_back(i);
  }
  return out;
}

SetPartition SetPartition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return from_labels(labels);
}

std::vector<std::size_t> SetPartition::labels() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t e : blocks_[b]) out[e] = b;
  return out;
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += ',';
    out += '{';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[b][i] + 1);
    }
    out += '}';
  }
  return out + "}";
}

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t blocks,
                                         std::span<const std::size_t> prefix)
    : n_(n), blocks_(blocks), fixed_(prefix.size()), labels_(n), prefix_max_(n) {
  if (n == 0 || blocks == 0 || blocks > n || prefix.size() > n) {
    done_ = true;
    return;
  }
  std::size_t max_label = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const bool ok = (i == 0) ? prefix[0] == 0 : prefix[i] <= max_label + 1;
    if (!ok) throw std::invalid_argument("PartitionEnumerator: prefix is not a restricted growth string");
    max_label = std::max(max_label, prefix[i]);
    labels_[i] = prefix[i];
    prefix_max_[i] = max_label;
  }
  done_ = !fill_from(prefix.size());
}

bool PartitionEnumerator::fill_from(std::size_t position) {
  std::size_t used = position == 0 ? 0 : prefix_max_[position - 1] + 1;
  if (used > blocks_ || used + (n_ - position) < blocks_) return false;
  for (std::size_t j = position; j < n_; ++j) {
    const std::size_t remaining = n_ - j;
    const std::size_t needed = blocks_ - used;
    if (j == 0) {
      labels_[0] = 0;
      used = 1;
    } else if (remaining > needed) {
      labels_[j] = 0;
    } else {
      labels_[j] = used++;
    }
    prefix_max_[j] = used - 1;
  }
  return true;
}

void PartitionEnumerator::next() {
  if (done_) return;
  for (std::size_t i = n_ - 1; i >= std::max<std::size_t>(fixed_, 1); --i) {
    const std::size_t candidate = labels_[i] + 1;
    const std::size_t prev_max = prefix_max_[i - 1];
    if (candidate <= prev_max + 1 && candidate < blocks_) {
      const std::size_t used = std::max(prev_max, candidate) + 1;
      if (used + (n_ - 1 - i) >= blocks_) {
        labels_[i] = candidate;
        prefix_max_[i] = used - 1;
        fill_from(i + 1);
        return;
      }
    }
  }
  done_ = true;
}

namespace {

void extend_prefixes(std::size_t n, std::size_t blocks, std::size_t depth,
                     std::vector<std::size_t>& current, std::size_t used,
                     std::vector<std::vector<std::size_t>>& out) {
  if (used > blocks || used + (n - current.size()) < blocks) return;
  if (current.size() == depth) {
    out.push_back(current);
    return;
  }
  const std::size_t top = current.empty() ? 0 : used;
  for (std::size_t label = 0; label <= top; ++label) {
    current.push_back(label);
    extend_prefixes(n, blocks, depth, current, std::max(used, label + 1), out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> partition_prefixes(std::size_t n,
                                                         std::size_t blocks,
                                                         std::size_t depth) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0 || blocks == 0 || blocks > n) return out;
  std::vector<std::size_t> current;
  extend_prefixes(n, blocks, std::min(depth, n), current, 0, out);
  return out;
}

void for_each_partition(std::size_t n, std::size_t blocks,
                        const std::function<void(std::span<const std::size_t>)>& visit) {
  for (PartitionEnumerator it(n, blocks); !it.done(); it.next()) visit(it.labels());
}

BigInt block_factorial_weight(std::span<const std::size_t> labels, std::size_t blocks) {
  std::vector<unsigned long> sizes(blocks, 0);
  for (std::size_t label : labels) ++sizes.at(label);
  BigInt weight = 1;
  for (unsigned long s : sizes)
    if (s > 2) weight *= factorial(s - 1);
  return weight;
}

BigInt block_factorial_weight(const SetPartition& partition) {
  const auto labels = partition.labels();
  return block_factorial_weight(labels, partition.size());
}

}  // namespace drchi

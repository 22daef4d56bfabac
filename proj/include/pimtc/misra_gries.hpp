#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pimtc/edge.hpp"

namespace pimtc {

// Bounded frequency summary. With capacity K over n processed items, any item
// with true frequency above n / K is guaranteed to be present.
class MisraGriesSummary {
 public:
  explicit MisraGriesSummary(std::uint32_t capacity) : capacity_(capacity) {
    if (capacity == 0)
      throw ArgumentError("summary capacity must be at least 1");
  }

  void update(NodeId item) {
    ++processed_;
    auto it = counters_.find(item);
    if (it != counters_.end()) {
      ++it->second;
      return;
    }
    if (counters_.size() < capacity_) {
      counters_.emplace(item, 1);
      return;
    }
    for (auto entry = counters_.begin(); entry != counters_.end();) {
      if (--entry->second == 0)
        entry = counters_.erase(entry);
      else
        ++entry;
    }
  }

  std::uint32_t capacity() const { return capacity_; }
  std::uint64_t processed() const { return processed_; }
  const std::unordered_map<NodeId, std::uint64_t>& counters() const {
    return counters_;
  }

  friend MisraGriesSummary mg_merge(std::span<const MisraGriesSummary> parts);

 private:
  std::unordered_map<NodeId, std::uint64_t> counters_;
  std::uint32_t capacity_;
  std::uint64_t processed_ = 0;
};

// Entry-wise sum, then if more than K counters survive, subtract the
// (K+1)-th largest count from every counter and drop the non-positive ones.
// Equivalent to rerunning the decrement rule over the concatenated streams.
inline MisraGriesSummary mg_merge(std::span<const MisraGriesSummary> parts) {
  if (parts.empty()) throw ArgumentError("cannot merge zero summaries");
  std::uint32_t capacity = parts.front().capacity();
  for (const auto& part : parts) {
    if (part.capacity() != capacity)
      throw ArgumentError("summary capacities differ: " +
                          std::to_string(part.capacity()) + " vs " +
                          std::to_string(capacity));
  }

  MisraGriesSummary merged(capacity);
  for (const auto& part : parts) {
    merged.processed_ += part.processed_;
    for (const auto& [item, count] : part.counters_) merged.counters_[item] += count;
  }
  if (merged.counters_.size() > capacity) {
    std::vector<std::uint64_t> counts;
    counts.reserve(merged.counters_.size());
    for (const auto& [item, count] : merged.counters_) counts.push_back(count);
    std::nth_element(counts.begin(), counts.begin() + capacity, counts.end(),
                     std::greater<>());
    std::uint64_t cut = counts[capacity];
    for (auto it = merged.counters_.begin(); it != merged.counters_.end();) {
      if (it->second <= cut) {
        it = merged.counters_.erase(it);
      } else {
        it->second -= cut;
        ++it;
      }
    }
  }
  return merged;
}

// Relabeling for heavy nodes: new ids sit directly above the graph's maximum
// id, and the most frequent node receives the largest id.
struct RemapTable {
  std::vector<std::pair<NodeId, NodeId>> entries;
  NodeId base = 0;

  bool empty() const { return entries.empty(); }
};

inline RemapTable select_top(const MisraGriesSummary& summary,
                             std::uint32_t top_count, NodeId max_node_id) {
  std::vector<std::pair<NodeId, std::uint64_t>> ranked(
      summary.counters().begin(), summary.counters().end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::uint64_t taken =
      std::min<std::uint64_t>(top_count, ranked.size());
  if (static_cast<std::uint64_t>(max_node_id) + taken > 0xffffffffull)
    throw ArgumentError("remap ids would overflow the 32-bit node word");

  RemapTable table;
  table.base = max_node_id;
  table.entries.reserve(taken);
  for (std::uint64_t i = 0; i < taken; ++i) {
    NodeId fresh = max_node_id + static_cast<NodeId>(taken - i);
    table.entries.emplace_back(ranked[i].first, fresh);
  }
  return table;
}

}  // namespace pimtc

#pragma once

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pimtc/edge.hpp"
#include "pimtc/misra_gries.hpp"
#include "pimtc/reservoir.hpp"
#include "pimtc/timer.hpp"

namespace pimtc {

// Simulated per-core memory budget: a 64 MB bank minus 1 MB reserved for
// metadata, at 8 bytes per edge.
inline constexpr std::uint64_t kBankCapacityEdges = (63ull * 1024 * 1024) / 8;

// Edges a thread may stage in fast scratch memory at a time. Every kernel
// read of the sample goes through a window of at most this many edges.
inline constexpr std::size_t kDefaultScratchEdges = 256;

struct CoreRunConfig {
  std::uint64_t capacity = 3;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::size_t scratch_capacity = kDefaultScratchEdges;
  bool monochromatic = false;
};

struct CoreReport {
  std::uint64_t raw_count = 0;
  std::uint64_t offered = 0;      // edges routed to the core (t)
  std::uint64_t capacity = 0;     // reservoir size (M)
  std::uint64_t sample_size = 0;  // min(t, M)
  bool monochromatic = false;
  double sort_ms = 0;
  double count_ms = 0;
};

// Rewrites heavy endpoints and restores the u < v invariant. The table is
// injective and fresh ids sit above every original id, so no edge collapses.
inline void apply_remap(std::vector<Edge>& edges, const RemapTable& remap) {
  if (remap.empty()) return;
  std::unordered_map<NodeId, NodeId> table(remap.entries.begin(),
                                           remap.entries.end());
  auto rewrite = [&](NodeId node) {
    auto it = table.find(node);
    return it == table.end() ? node : it->second;
  };
  for (Edge& e : edges) {
    NodeId u = rewrite(e.u);
    NodeId v = rewrite(e.v);
    assert(u != v);
    e = normalized(u, v);
  }
}

inline void sort_sample(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
}

// Directory over a sorted sample: one entry per distinct first endpoint,
// holding the offset where that node's region begins.
struct RegionIndex {
  struct Entry {
    NodeId first_node = 0;
    std::uint32_t start = 0;
  };

  std::vector<Entry> entries;
  std::uint32_t sample_size = 0;

  std::uint32_t end_of(std::size_t entry_index) const {
    return entry_index + 1 < entries.size() ? entries[entry_index + 1].start
                                            : sample_size;
  }

  // Region [start, end) of edges whose first endpoint is `node`.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> lookup(NodeId node) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), node,
        [](const Entry& e, NodeId n) { return e.first_node < n; });
    if (it == entries.end() || it->first_node != node) return std::nullopt;
    std::size_t k = static_cast<std::size_t>(it - entries.begin());
    return std::make_pair(it->start, end_of(k));
  }

  // Index of the entry whose region covers a sample position.
  std::size_t entry_at(std::uint32_t position) const {
    auto it = std::upper_bound(
        entries.begin(), entries.end(), position,
        [](std::uint32_t pos, const Entry& e) { return pos < e.start; });
    return static_cast<std::size_t>(it - entries.begin()) - 1;
  }
};

inline RegionIndex build_region_index(std::span<const Edge> sorted_sample) {
  RegionIndex index;
  index.sample_size = static_cast<std::uint32_t>(sorted_sample.size());
  NodeId prev = 0;
  for (std::uint32_t i = 0; i < sorted_sample.size(); ++i) {
    NodeId u = sorted_sample[i].u;
    if (index.entries.empty() || u != prev) {
      index.entries.push_back({u, i});
      prev = u;
    }
  }
  return index;
}

namespace detail {

// Sequential reader over sample[begin, end) that stages edges through a
// bounded buffer, standing in for a DMA window into scratch memory.
class ScratchWindow {
 public:
  ScratchWindow(std::span<const Edge> sample, std::size_t begin, std::size_t end,
                Edge* buffer, std::size_t buffer_capacity)
      : sample_(sample), next_(begin), end_(end), buffer_(buffer),
        buffer_capacity_(buffer_capacity) {
    fill();
  }

  bool empty() const { return cursor_ == filled_; }
  const Edge& front() const { return buffer_[cursor_]; }

  void pop() {
    ++cursor_;
    if (cursor_ == filled_ && next_ < end_) fill();
  }

 private:
  void fill() {
    cursor_ = 0;
    filled_ = std::min(buffer_capacity_, end_ - next_);
    std::copy_n(sample_.data() + next_, filled_, buffer_);
    next_ += filled_;
  }

  std::span<const Edge> sample_;
  std::size_t next_;
  std::size_t end_;
  Edge* buffer_;
  std::size_t buffer_capacity_;
  std::size_t cursor_ = 0;
  std::size_t filled_ = 0;
};

}  // namespace detail

// Merge-based kernel over a sorted sample. Each thread claims a chunk of
// edges from a shared cursor; for edge (u, v) it merges u's region past v
// with v's whole region, so triangle {a < b < c} is charged to edge (a, b)
// exactly once. All sample reads pass through bounded scratch windows.
inline std::uint64_t count_triangles(std::span<const Edge> sample,
                                     const RegionIndex& index,
                                     unsigned threads,
                                     std::size_t scratch_capacity) {
  if (threads == 0) throw ArgumentError("thread count must be at least 1");
  if (scratch_capacity < 2)
    throw ArgumentError("scratch capacity must hold at least 2 edges");
  if (sample.empty()) return 0;

  std::atomic<std::size_t> cursor{0};
  std::atomic<std::uint64_t> total{0};

  auto worker = [&]() {
    std::vector<Edge> chunk_buf(scratch_capacity);
    std::vector<Edge> u_buf(scratch_capacity);
    std::vector<Edge> v_buf(scratch_capacity);
    std::uint64_t local = 0;
    for (;;) {
      std::size_t begin = cursor.fetch_add(scratch_capacity);
      if (begin >= sample.size()) break;
      std::size_t end = std::min(begin + scratch_capacity, sample.size());
      std::copy(sample.begin() + begin, sample.begin() + end, chunk_buf.begin());

      std::size_t region = index.entry_at(static_cast<std::uint32_t>(begin));
      for (std::size_t i = begin; i < end; ++i) {
        while (index.end_of(region) <= i) ++region;
        const Edge e = chunk_buf[i - begin];
        auto v_region = index.lookup(e.v);
        if (!v_region) continue;

        detail::ScratchWindow uw(sample, i + 1, index.end_of(region),
                                 u_buf.data(), scratch_capacity);
        detail::ScratchWindow vw(sample, v_region->first, v_region->second,
                                 v_buf.data(), scratch_capacity);
        while (!uw.empty() && !vw.empty()) {
          NodeId w = uw.front().v;
          NodeId z = vw.front().v;
          if (w == z) {
            ++local;
            uw.pop();
            vw.pop();
          } else if (w < z) {
            uw.pop();
          } else {
            vw.pop();
          }
        }
      }
    }
    total.fetch_add(local, std::memory_order_relaxed);
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return total.load();
}

// Count phase over an already drawn sample: remap, sort, index, count.
inline CoreReport count_sample(std::vector<Edge> sample, std::uint64_t offered,
                               const RemapTable& remap, const CoreRunConfig& cfg) {
  CoreReport report;
  report.offered = offered;
  report.capacity = cfg.capacity;
  report.sample_size = sample.size();
  report.monochromatic = cfg.monochromatic;

  StopWatch organize;
  apply_remap(sample, remap);
  sort_sample(sample);
  RegionIndex index = build_region_index(sample);
  report.sort_ms = organize.elapsed_ms();

  StopWatch count;
  report.raw_count =
      count_triangles(sample, index, cfg.threads, cfg.scratch_capacity);
  report.count_ms = count.elapsed_ms();
  return report;
}

// Full single-core pass: stream the batch through a reservoir, then count.
inline CoreReport run_core(std::span<const Edge> batch, const RemapTable& remap,
                           const CoreRunConfig& cfg) {
  ReservoirSample reservoir(cfg.capacity, cfg.seed);
  for (const Edge& e : batch) reservoir.offer(e);
  return count_sample(reservoir.snapshot(), reservoir.offered(), remap, cfg);
}

}  // namespace pimtc

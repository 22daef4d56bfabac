#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "pimtc/coloring.hpp"
#include "pimtc/edge.hpp"
#include "pimtc/misra_gries.hpp"
#include "pimtc/rng.hpp"
#include "pimtc/triplets.hpp"

namespace pimtc {

struct CoreBatchSet {
  // Indexed by core id; each edge appears in exactly `colors` batches.
  std::vector<std::vector<Edge>> batches;
  // Edges ever routed to each core, pre-reservoir (the per-core t).
  std::vector<std::uint64_t> routed;

  std::size_t core_count() const { return batches.size(); }

  std::uint64_t total_edges() const {
    std::uint64_t sum = 0;
    for (const auto& b : batches) sum += b.size();
    return sum;
  }
};

struct PartitionOptions {
  ColoringParams coloring;
  double uniform_p = 1.0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  std::uint32_t mg_capacity = 0;  // 0 leaves the degree summary out
};

struct PartitionResult {
  CoreBatchSet batches;
  std::optional<MisraGriesSummary> degrees;
};

// Peak expected edges per core, 6|E|/C^2; the three triplet shapes load as
// N : 3N : 6N with N = |E|/C^2 and the mixed-color cores dominate.
inline double expected_core_load(std::uint64_t edge_count, std::uint32_t colors) {
  if (colors == 0) throw ArgumentError("color count must be at least 1");
  return 6.0 * static_cast<double>(edge_count) /
         (static_cast<double>(colors) * static_cast<double>(colors));
}

// Routes every kept edge to the C cores whose triplet contains both endpoint
// colors. Workers take contiguous stream ranges and build private batches
// and degree summaries, joined in worker order, so a fixed (seed, workers)
// pair reproduces the output exactly.
inline PartitionResult build_batches(std::span<const Edge> edges,
                                     const PartitionOptions& opt) {
  if (opt.workers == 0) throw ArgumentError("worker count must be at least 1");
  if (!(opt.uniform_p > 0.0) || opt.uniform_p > 1.0)
    throw ArgumentError("uniform sampling probability must lie in (0, 1]");
  const std::uint32_t colors = opt.coloring.colors;
  if (colors == 0) throw ArgumentError("color count must be at least 1");

  const std::size_t cores = static_cast<std::size_t>(triplet_count(colors));

  // Routing table for canonical color pairs (a <= b).
  std::vector<std::vector<std::uint64_t>> routes(pair_count(colors));
  auto pair_slot = [colors](std::uint32_t a, std::uint32_t b) {
    // rank of (a, b) with a <= b among sorted pairs, lexicographic
    std::uint64_t skipped = pair_count(colors) - pair_count(colors - a);
    return skipped + (b - a);
  };
  for (std::uint32_t a = 0; a < colors; ++a)
    for (std::uint32_t b = a; b < colors; ++b)
      routes[pair_slot(a, b)] = compatible_cores(a, b, colors);

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(opt.workers,
                                                  std::max<std::size_t>(edges.size(), 1)));

  struct WorkerOutput {
    std::vector<std::vector<Edge>> batches;
    std::optional<MisraGriesSummary> degrees;
  };
  std::vector<WorkerOutput> outputs(workers);

  auto run_worker = [&](unsigned w) {
    std::size_t begin = edges.size() * w / workers;
    std::size_t end = edges.size() * (w + 1) / workers;
    WorkerOutput& out = outputs[w];
    out.batches.resize(cores);
    if (opt.mg_capacity > 0) out.degrees.emplace(opt.mg_capacity);
    Rng keep(derive_seed(opt.seed, Stream::kPartition, w));
    const bool sampling = opt.uniform_p < 1.0;
    for (std::size_t i = begin; i < end; ++i) {
      if (sampling && keep.uniform() >= opt.uniform_p) continue;
      const Edge e = edges[i];
      if (out.degrees) {
        out.degrees->update(e.u);
        out.degrees->update(e.v);
      }
      std::uint32_t cu = color_of(e.u, opt.coloring);
      std::uint32_t cv = color_of(e.v, opt.coloring);
      if (cv < cu) std::swap(cu, cv);
      for (std::uint64_t core : routes[pair_slot(cu, cv)])
        out.batches[core].push_back(e);
    }
  };

  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }

  PartitionResult result;
  result.batches.batches.resize(cores);
  result.batches.routed.assign(cores, 0);
  for (std::size_t core = 0; core < cores; ++core) {
    std::size_t total = 0;
    for (const auto& out : outputs) total += out.batches[core].size();
    result.batches.routed[core] = total;
    result.batches.batches[core].reserve(total);
    for (const auto& out : outputs)
      result.batches.batches[core].insert(result.batches.batches[core].end(),
                                          out.batches[core].begin(),
                                          out.batches[core].end());
  }
  if (opt.mg_capacity > 0) {
    std::vector<MisraGriesSummary> parts;
    parts.reserve(workers);
    for (auto& out : outputs) parts.push_back(std::move(*out.degrees));
    result.degrees = mg_merge(parts);
  }
  return result;
}

}  // namespace pimtc

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "pimtc/coloring.hpp"
#include "pimtc/edge.hpp"
#include "pimtc/estimator.hpp"
#include "pimtc/graph_io.hpp"
#include "pimtc/misra_gries.hpp"
#include "pimtc/oracle.hpp"
#include "pimtc/partitioner.hpp"
#include "pimtc/pim_core.hpp"
#include "pimtc/reservoir.hpp"
#include "pimtc/rng.hpp"
#include "pimtc/timer.hpp"
#include "pimtc/triplets.hpp"

namespace pimtc {

struct RunConfig {
  std::string input_path;
  std::uint32_t colors = 5;
  double uniform_p = 1.0;
  std::optional<std::uint64_t> capacity;     // explicit reservoir size
  std::optional<double> capacity_fraction;   // reservoir size from expected load
  std::uint32_t mg_capacity = 0;             // summary size K; 0 disables it
  std::uint32_t mg_top = 0;                  // heavy nodes to remap; 0 disables
  unsigned host_workers = 32;
  unsigned core_threads = 16;
  std::size_t scratch_capacity = kDefaultScratchEdges;
  std::uint64_t seed = 0;
};

struct CoreStat {
  std::uint64_t core = 0;
  ColorTriplet triplet;
  bool monochromatic = false;
  std::uint64_t offered = 0;
  std::uint64_t sample_size = 0;
  std::uint64_t raw_count = 0;
  double sort_ms = 0;
  double count_ms = 0;
};

struct RunReport {
  unsigned iteration = 1;
  Estimate estimate;
  double setup_ms = 0;       // non-zero on the first iteration only
  double sample_ms = 0;
  double count_ms = 0;
  double cumulative_ms = 0;  // setup plus all phases up to this iteration
  std::uint64_t chunk_edges = 0;
  std::uint64_t edges_streamed = 0;  // across iterations so far
  std::uint64_t graph_edges = 0;
  NodeId max_node_id = 0;
  std::uint64_t capacity = 0;
  std::vector<CoreStat> cores;
};

inline void validate_config(const RunConfig& cfg) {
  if (cfg.colors == 0) throw ArgumentError("color count must be at least 1");
  if (!(cfg.uniform_p > 0.0) || cfg.uniform_p > 1.0)
    throw ArgumentError("uniform sampling probability must lie in (0, 1]");
  if (cfg.capacity && cfg.capacity_fraction)
    throw ArgumentError("capacity and capacity fraction are mutually exclusive");
  if (cfg.capacity && *cfg.capacity < 3)
    throw ArgumentError("reservoir capacity must be at least 3");
  if (cfg.capacity_fraction && !(*cfg.capacity_fraction > 0.0))
    throw ArgumentError("capacity fraction must be positive");
  if (cfg.mg_top > 0 && cfg.mg_capacity == 0)
    throw ArgumentError("remapping needs a summary: set the summary size too");
  if (cfg.host_workers == 0) throw ArgumentError("host worker count must be at least 1");
  if (cfg.core_threads == 0) throw ArgumentError("core thread count must be at least 1");
  if (cfg.scratch_capacity < 2)
    throw ArgumentError("scratch capacity must hold at least 2 edges");
}

// Auto capacity keeps whole streams resident up to the simulated bank size,
// so desk-scale runs without sampling flags stay exact. An explicit fraction
// scales the expected peak core load 6|E|/C^2 instead.
inline std::uint64_t resolve_capacity(const RunConfig& cfg, std::uint64_t edge_count) {
  if (cfg.capacity) return *cfg.capacity;
  if (cfg.capacity_fraction) {
    double raw = std::ceil(*cfg.capacity_fraction *
                           expected_core_load(edge_count, cfg.colors));
    return std::max<std::uint64_t>(3, static_cast<std::uint64_t>(raw));
  }
  return std::clamp<std::uint64_t>(edge_count, 3, kBankCapacityEdges);
}

namespace detail {

template <typename Fn>
inline void parallel_for_index(std::size_t count, unsigned workers, Fn&& fn) {
  if (count == 0) return;
  if (workers <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  unsigned spawned = static_cast<unsigned>(
      std::min<std::size_t>(workers, count));
  std::vector<std::thread> pool;
  pool.reserve(spawned);
  for (unsigned w = 0; w < spawned; ++w) pool.emplace_back(drain);
  for (auto& t : pool) t.join();
}

}  // namespace detail

// Chunked engine shared by the static and dynamic entry points. Reservoirs
// and the degree summary persist across chunks; every iteration re-runs the
// count phase over the current samples.
inline std::vector<RunReport> run_on_graph(const RunConfig& cfg, const EdgeList& graph,
                                           unsigned chunk_count, double load_ms = 0.0) {
  validate_config(cfg);
  if (chunk_count == 0) throw ArgumentError("chunk count must be at least 1");

  StopWatch setup_watch;
  ColoringParams coloring = ColoringParams::draw(cfg.colors, graph.max_node_id, cfg.seed);
  std::vector<ColorTriplet> triplets = enumerate_triplets(cfg.colors);
  std::uint64_t capacity = resolve_capacity(cfg, graph.edges.size());
  std::vector<ReservoirSample> reservoirs;
  reservoirs.reserve(triplets.size());
  for (std::size_t core = 0; core < triplets.size(); ++core)
    reservoirs.emplace_back(capacity, derive_seed(cfg.seed, Stream::kReservoir, core));
  std::vector<std::span<const Edge>> chunks = split_chunks(graph.edges, chunk_count);
  std::optional<MisraGriesSummary> degrees;
  const double setup_ms = load_ms + setup_watch.elapsed_ms();

  std::vector<RunReport> reports;
  reports.reserve(chunk_count);
  double phase_total = 0;
  std::uint64_t streamed = 0;

  for (unsigned iter = 0; iter < chunk_count; ++iter) {
    StopWatch sample_watch;
    PartitionOptions popt;
    popt.coloring = coloring;
    popt.uniform_p = cfg.uniform_p;
    popt.seed = derive_seed(cfg.seed, Stream::kPartition, iter);
    popt.workers = cfg.host_workers;
    popt.mg_capacity = cfg.mg_capacity;
    PartitionResult part = build_batches(chunks[iter], popt);

    detail::parallel_for_index(
        reservoirs.size(), cfg.host_workers, [&](std::size_t core) {
          for (const Edge& e : part.batches.batches[core]) reservoirs[core].offer(e);
        });
    if (part.degrees) {
      if (!degrees) {
        degrees = std::move(*part.degrees);
      } else {
        std::array<MisraGriesSummary, 2> parts{std::move(*degrees),
                                               std::move(*part.degrees)};
        degrees = mg_merge(parts);
      }
    }
    const double sample_ms = sample_watch.elapsed_ms();

    StopWatch count_watch;
    RemapTable remap;
    remap.base = graph.max_node_id;
    if (cfg.mg_top > 0 && degrees)
      remap = select_top(*degrees, cfg.mg_top, graph.max_node_id);

    std::vector<CoreReport> core_reports(reservoirs.size());
    detail::parallel_for_index(
        reservoirs.size(), cfg.host_workers, [&](std::size_t core) {
          CoreRunConfig ccfg;
          ccfg.capacity = capacity;
          ccfg.threads = cfg.core_threads;
          ccfg.scratch_capacity = cfg.scratch_capacity;
          ccfg.monochromatic = triplets[core].monochromatic();
          core_reports[core] = count_sample(reservoirs[core].snapshot(),
                                            reservoirs[core].offered(), remap, ccfg);
        });
    Estimate estimate = aggregate(core_reports, cfg.colors, cfg.uniform_p);
    const double count_ms = count_watch.elapsed_ms();

    streamed += chunks[iter].size();
    phase_total += sample_ms + count_ms;

    RunReport rep;
    rep.iteration = iter + 1;
    rep.estimate = estimate;
    rep.setup_ms = iter == 0 ? setup_ms : 0.0;
    rep.sample_ms = sample_ms;
    rep.count_ms = count_ms;
    rep.cumulative_ms = setup_ms + phase_total;
    rep.chunk_edges = chunks[iter].size();
    rep.edges_streamed = streamed;
    rep.graph_edges = graph.edges.size();
    rep.max_node_id = graph.max_node_id;
    rep.capacity = capacity;
    rep.cores.reserve(core_reports.size());
    for (std::size_t core = 0; core < core_reports.size(); ++core) {
      const CoreReport& cr = core_reports[core];
      rep.cores.push_back(CoreStat{core, triplets[core], cr.monochromatic,
                                   cr.offered, cr.sample_size, cr.raw_count,
                                   cr.sort_ms, cr.count_ms});
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

inline RunReport run_static(const RunConfig& cfg) {
  StopWatch load_watch;
  EdgeList graph = load_edge_list(cfg.input_path, cfg.seed);
  double load_ms = load_watch.elapsed_ms();
  return run_on_graph(cfg, graph, 1, load_ms).front();
}

inline std::vector<RunReport> run_dynamic(const RunConfig& cfg, unsigned chunk_count) {
  StopWatch load_watch;
  EdgeList graph = load_edge_list(cfg.input_path, cfg.seed);
  double load_ms = load_watch.elapsed_ms();
  return run_on_graph(cfg, graph, chunk_count, load_ms);
}

enum class SweepAxis { kColors, kUniformP, kCapacityFraction, kMgCapacity, kMgTop };

inline const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kColors: return "colors";
    case SweepAxis::kUniformP: return "uniform_p";
    case SweepAxis::kCapacityFraction: return "capacity_fraction";
    case SweepAxis::kMgCapacity: return "mg_K";
    case SweepAxis::kMgTop: return "mg_top_t";
  }
  return "";
}

inline SweepAxis parse_axis(std::string_view name) {
  if (name == "colors") return SweepAxis::kColors;
  if (name == "uniform_p") return SweepAxis::kUniformP;
  if (name == "capacity_fraction") return SweepAxis::kCapacityFraction;
  if (name == "mg_K") return SweepAxis::kMgCapacity;
  if (name == "mg_top_t") return SweepAxis::kMgTop;
  throw ArgumentError("unknown sweep axis '" + std::string(name) + "'");
}

namespace detail {

inline std::uint64_t axis_integer(double value, const char* what) {
  if (!(value >= 0) || value != std::floor(value))
    throw ArgumentError(std::string(what) + " must be a non-negative integer");
  return static_cast<std::uint64_t>(value);
}

inline void apply_axis(RunConfig& cfg, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::kColors:
      cfg.colors = static_cast<std::uint32_t>(axis_integer(value, "colors"));
      return;
    case SweepAxis::kUniformP:
      cfg.uniform_p = value;
      return;
    case SweepAxis::kCapacityFraction:
      cfg.capacity.reset();
      cfg.capacity_fraction = value;
      return;
    case SweepAxis::kMgCapacity:
      cfg.mg_capacity = static_cast<std::uint32_t>(axis_integer(value, "mg_K"));
      return;
    case SweepAxis::kMgTop:
      cfg.mg_top = static_cast<std::uint32_t>(axis_integer(value, "mg_top_t"));
      return;
  }
}

}  // namespace detail

struct SweepRun {
  double axis_value = 0;
  RunReport report;
  double relative_error = 0;  // NaN when the true count is zero
};

struct SweepResult {
  SweepAxis axis = SweepAxis::kColors;
  double truth = 0;
  std::vector<SweepRun> runs;
};

// One static run per axis value. The graph is parsed once; every point gets
// its own sub-seed. Truth defaults to the reference count when no override
// is supplied.
inline SweepResult sweep(const RunConfig& base, SweepAxis axis,
                         std::span<const double> values,
                         std::optional<double> truth_override = std::nullopt) {
  if (values.empty()) throw ArgumentError("sweep needs at least one value");
  StopWatch load_watch;
  EdgeList graph = load_edge_list(base.input_path, base.seed);
  double load_ms = load_watch.elapsed_ms();
  double truth = truth_override ? *truth_override
                                : static_cast<double>(exact_count(graph.edges));

  SweepResult result;
  result.axis = axis;
  result.truth = truth;
  result.runs.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    RunConfig cfg = base;
    detail::apply_axis(cfg, axis, values[i]);
    cfg.seed = derive_seed(base.seed, Stream::kSweep, i);
    RunReport report =
        run_on_graph(cfg, graph, 1, i == 0 ? load_ms : 0.0).front();
    double rel = truth != 0.0
                     ? std::abs(report.estimate.value - truth) / truth
                     : std::numeric_limits<double>::quiet_NaN();
    result.runs.push_back(SweepRun{values[i], std::move(report), rel});
  }
  return result;
}

}  // namespace pimtc

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pimtc/harness.hpp"

namespace pimtc {

using json = nlohmann::ordered_json;

namespace detail {

inline json number_or_null(double value) {
  if (std::isnan(value) || std::isinf(value)) return nullptr;
  return value;
}

}  // namespace detail

inline json config_json(const RunConfig& cfg) {
  json j;
  j["input"] = cfg.input_path;
  j["colors"] = cfg.colors;
  j["uniform_p"] = cfg.uniform_p;
  if (cfg.capacity)
    j["capacity"] = *cfg.capacity;
  else if (cfg.capacity_fraction)
    j["capacity_fraction"] = *cfg.capacity_fraction;
  else
    j["capacity"] = "auto";
  j["mg_K"] = cfg.mg_capacity;
  j["mg_top_t"] = cfg.mg_top;
  j["host_workers"] = cfg.host_workers;
  j["core_threads"] = cfg.core_threads;
  j["seed"] = cfg.seed;
  return j;
}

inline json estimate_json(const Estimate& est) {
  json j;
  j["value"] = est.value;
  j["rounded"] = est.rounded;
  j["exact"] = est.exact;
  j["negative_warning"] = est.negative_warning;
  return j;
}

inline json core_stat_json(const CoreStat& stat) {
  json j;
  j["core"] = stat.core;
  j["triplet"] = {stat.triplet.colors[0], stat.triplet.colors[1],
                  stat.triplet.colors[2]};
  j["monochromatic"] = stat.monochromatic;
  j["offered"] = stat.offered;
  j["sample_size"] = stat.sample_size;
  j["raw_count"] = stat.raw_count;
  j["sort_ms"] = stat.sort_ms;
  j["count_ms"] = stat.count_ms;
  return j;
}

inline json iteration_json(const RunReport& rep, bool include_cores = true) {
  json j;
  j["iteration"] = rep.iteration;
  j["estimate"] = estimate_json(rep.estimate);
  j["timings_ms"] = {{"Setup Time", rep.setup_ms},
                     {"Sample Creation Time", rep.sample_ms},
                     {"Triangle Count Time", rep.count_ms}};
  j["cumulative_ms"] = rep.cumulative_ms;
  j["chunk_edges"] = rep.chunk_edges;
  j["edges_streamed"] = rep.edges_streamed;
  if (include_cores) {
    json cores = json::array();
    for (const CoreStat& stat : rep.cores) cores.push_back(core_stat_json(stat));
    j["cores"] = cores;
  }
  return j;
}

inline json run_report_json(const RunConfig& cfg, std::span<const RunReport> reports,
                            const std::string& mode, bool include_cores = true) {
  json j;
  j["mode"] = mode;
  j["config"] = config_json(cfg);
  if (!reports.empty()) {
    const RunReport& first = reports.front();
    j["graph"] = {{"edges", first.graph_edges},
                  {"max_node_id", first.max_node_id},
                  {"reservoir_capacity", first.capacity}};
    j["estimate"] = estimate_json(reports.back().estimate);
  }
  json iterations = json::array();
  for (const RunReport& rep : reports)
    iterations.push_back(iteration_json(rep, include_cores));
  j["iterations"] = iterations;
  return j;
}

inline json sweep_report_json(const RunConfig& cfg, const SweepResult& result,
                              bool include_cores = false) {
  json j;
  j["mode"] = "sweep";
  j["axis"] = axis_name(result.axis);
  j["config"] = config_json(cfg);
  j["truth"] = result.truth;
  json runs = json::array();
  for (const SweepRun& run : result.runs) {
    json r;
    r[axis_name(result.axis)] = run.axis_value;
    r["estimate"] = estimate_json(run.report.estimate);
    r["relative_error"] = detail::number_or_null(run.relative_error);
    r["timings_ms"] = {{"Setup Time", run.report.setup_ms},
                       {"Sample Creation Time", run.report.sample_ms},
                       {"Triangle Count Time", run.report.count_ms}};
    if (include_cores) {
      json cores = json::array();
      for (const CoreStat& stat : run.report.cores)
        cores.push_back(core_stat_json(stat));
      r["cores"] = cores;
    }
    runs.push_back(r);
  }
  j["runs"] = runs;
  return j;
}

inline std::string run_report_csv(std::span<const RunReport> reports) {
  std::ostringstream out;
  out << "iteration,estimate,rounded,exact,negative_warning,setup_ms,"
         "sample_creation_ms,triangle_count_ms,cumulative_ms,chunk_edges,"
         "edges_streamed\n";
  for (const RunReport& rep : reports) {
    out << rep.iteration << ',' << rep.estimate.value << ',' << rep.estimate.rounded
        << ',' << (rep.estimate.exact ? 1 : 0) << ','
        << (rep.estimate.negative_warning ? 1 : 0) << ',' << rep.setup_ms << ','
        << rep.sample_ms << ',' << rep.count_ms << ',' << rep.cumulative_ms << ','
        << rep.chunk_edges << ',' << rep.edges_streamed << '\n';
  }
  return out.str();
}

inline std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "axis,value,estimate,rounded,exact,truth,relative_error,setup_ms,"
         "sample_creation_ms,triangle_count_ms\n";
  for (const SweepRun& run : result.runs) {
    out << axis_name(result.axis) << ',' << run.axis_value << ','
        << run.report.estimate.value << ',' << run.report.estimate.rounded << ','
        << (run.report.estimate.exact ? 1 : 0) << ',' << result.truth << ',';
    if (std::isnan(run.relative_error))
      out << "";
    else
      out << run.relative_error;
    out << ',' << run.report.setup_ms << ',' << run.report.sample_ms << ','
        << run.report.count_ms << '\n';
  }
  return out.str();
}

}  // namespace pimtc

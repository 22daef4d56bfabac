#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>

#include "pimtc/edge.hpp"
#include "pimtc/pim_core.hpp"
#include "pimtc/triplets.hpp"

namespace pimtc {

struct Estimate {
  double value = 0;
  std::int64_t rounded = 0;
  // True when no sampling took place anywhere, so value is the exact count.
  bool exact = false;
  // Sampling noise can push the corrected value below zero; it is reported
  // as-is rather than clamped.
  bool negative_warning = false;
};

// Probability that a fixed triangle inside the core survived reservoir
// replacement: all three of its edges must sit in the final uniform M-subset
// of the t offered edges, hence M(M-1)(M-2) / t(t-1)(t-2).
inline double reservoir_factor(std::uint64_t capacity, std::uint64_t offered) {
  if (capacity < 3) throw ArgumentError("reservoir capacity must be at least 3");
  if (offered <= capacity) return 1.0;
  double m = static_cast<double>(capacity);
  double t = static_cast<double>(offered);
  return (m * (m - 1.0) * (m - 2.0)) / (t * (t - 1.0) * (t - 2.0));
}

inline double correct_core(const CoreReport& report) {
  return static_cast<double>(report.raw_count) /
         reservoir_factor(report.capacity, report.offered);
}

// Combines per-core counts: reservoir correction first, then the
// redundant-count subtraction (monochromatic triangles are found by exactly
// C cores), then the global uniform-sampling correction.
inline Estimate aggregate(std::span<const CoreReport> reports, std::uint32_t colors,
                          double uniform_p) {
  if (colors == 0) throw ArgumentError("color count must be at least 1");
  if (!(uniform_p > 0.0) || uniform_p > 1.0)
    throw ArgumentError("uniform sampling probability must lie in (0, 1]");
  if (reports.size() != triplet_count(colors))
    throw ArgumentError("expected " + std::to_string(triplet_count(colors)) +
                        " core reports for " + std::to_string(colors) +
                        " colors, got " + std::to_string(reports.size()));

  double sum_all = 0;
  double sum_mono = 0;
  std::uint64_t mono_cores = 0;
  bool sampled = uniform_p < 1.0;
  for (const CoreReport& r : reports) {
    double corrected = correct_core(r);
    sum_all += corrected;
    if (r.monochromatic) {
      sum_mono += corrected;
      ++mono_cores;
    }
    if (r.offered > r.capacity) sampled = true;
  }
  if (mono_cores != colors)
    throw ArgumentError("expected " + std::to_string(colors) +
                        " monochromatic cores, got " +
                        std::to_string(mono_cores));

  Estimate est;
  est.value = (sum_all - (colors - 1.0) * sum_mono) /
              (uniform_p * uniform_p * uniform_p);
  est.rounded = std::llrint(est.value);
  est.exact = !sampled;
  est.negative_warning = est.value < 0.0;
  return est;
}

}  // namespace pimtc

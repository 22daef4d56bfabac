#pragma once

#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>

#include "pimtc/edge.hpp"
#include "pimtc/graph_io.hpp"
#include "pimtc/rng.hpp"

namespace pimtc {

// Generators emit raw COO pairs; rmat in particular produces self-loops and
// duplicates that the normal preprocessing pass is expected to clean.

inline RawEdgeList gen_erdos_renyi(std::uint64_t nodes, double edge_probability,
                                   std::uint64_t seed) {
  if (nodes > kMaxNodeId + 1ull)
    throw ArgumentError("node count exceeds the 31-bit id space");
  if (edge_probability < 0.0 || edge_probability > 1.0)
    throw ArgumentError("edge probability must lie in [0, 1]");
  RawEdgeList out;
  Rng rng(derive_seed(seed, Stream::kSynth));
  for (std::uint64_t u = 0; u + 1 < nodes; ++u) {
    for (std::uint64_t v = u + 1; v < nodes; ++v) {
      if (rng.uniform() < edge_probability)
        out.edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return out;
}

struct RmatParams {
  unsigned scale = 10;          // 2^scale nodes
  std::uint64_t edges = 1u << 14;
  double a = 0.59;
  double b = 0.19;
  double c = 0.19;              // d = 1 - a - b - c
};

inline RawEdgeList gen_rmat(const RmatParams& p, std::uint64_t seed) {
  if (p.scale == 0 || p.scale > 30)
    throw ArgumentError("rmat scale must lie in [1, 30]");
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.a + p.b + p.c > 1.0)
    throw ArgumentError("rmat quadrant weights must be non-negative and sum to at most 1");
  RawEdgeList out;
  out.edges.reserve(p.edges);
  Rng rng(derive_seed(seed, Stream::kSynth));
  for (std::uint64_t i = 0; i < p.edges; ++i) {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    for (unsigned level = 0; level < p.scale; ++level) {
      double r = rng.uniform();
      std::uint32_t qu = 0;
      std::uint32_t qv = 0;
      if (r < p.a) {
        // top-left
      } else if (r < p.a + p.b) {
        qv = 1;
      } else if (r < p.a + p.b + p.c) {
        qu = 1;
      } else {
        qu = 1;
        qv = 1;
      }
      u = (u << 1) | qu;
      v = (v << 1) | qv;
    }
    out.edges.emplace_back(u, v);
  }
  return out;
}

// A clique of `clique` nodes whose node 0 additionally fans out to `leaves`
// degree-one nodes, giving one known hub and binom(clique, 3) triangles.
inline RawEdgeList gen_star_clique(std::uint64_t leaves, std::uint64_t clique) {
  if (clique < 3) throw ArgumentError("clique size must be at least 3");
  if (clique + leaves > kMaxNodeId + 1ull)
    throw ArgumentError("node count exceeds the 31-bit id space");
  RawEdgeList out;
  for (std::uint64_t i = 0; i < clique; ++i)
    for (std::uint64_t j = i + 1; j < clique; ++j)
      out.edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  for (std::uint64_t k = 0; k < leaves; ++k)
    out.edges.emplace_back(0, static_cast<NodeId>(clique + k));
  return out;
}

inline void write_coo(std::ostream& out, const RawEdgeList& graph) {
  for (auto [u, v] : graph.edges) out << u << ' ' << v << '\n';
}

inline void write_coo(const std::string& path, const RawEdgeList& graph) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  write_coo(out, graph);
  if (!out) throw IoError("failed writing to '" + path + "'");
}

}  // namespace pimtc

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pimtc/edge.hpp"

// Reference implementations used only by tests and as ground truth for the
// harness. Deliberately share no code with the counting kernel.

namespace pimtc {

struct AdjacencyView {
  std::unordered_map<NodeId, std::vector<NodeId>> neighbors;

  static AdjacencyView build(std::span<const Edge> edges) {
    AdjacencyView adj;
    for (const Edge& e : edges) {
      adj.neighbors[e.u].push_back(e.v);
      adj.neighbors[e.v].push_back(e.u);
    }
    for (auto& [node, list] : adj.neighbors) std::sort(list.begin(), list.end());
    return adj;
  }

  bool adjacent(NodeId a, NodeId b) const {
    auto it = neighbors.find(a);
    if (it == neighbors.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), b);
  }
};

// Edge-iterator count: for every edge (u, v) with u < v, count common
// neighbors w > v. Each triangle {a < b < c} is found once, at edge (a, b).
inline std::uint64_t exact_count(std::span<const Edge> edges) {
  AdjacencyView adj = AdjacencyView::build(edges);
  std::uint64_t total = 0;
  for (const Edge& e : edges) {
    const auto& nu = adj.neighbors.at(e.u);
    for (auto it = std::upper_bound(nu.begin(), nu.end(), e.v); it != nu.end(); ++it) {
      if (adj.adjacent(e.v, *it)) ++total;
    }
  }
  return total;
}

// Node-triple count over a hashed edge set. Structurally different from
// exact_count on purpose; cubic in the node count, so small inputs only.
inline std::uint64_t exact_count_cubic(std::span<const Edge> edges) {
  std::vector<NodeId> nodes;
  std::unordered_set<std::uint64_t> present;
  auto key = [](NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  for (const Edge& e : edges) {
    nodes.push_back(e.u);
    nodes.push_back(e.v);
    present.insert(key(e.u, e.v));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto has = [&](NodeId a, NodeId b) { return present.count(key(a, b)) != 0; };
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!has(nodes[i], nodes[j])) continue;
      for (std::size_t k = j + 1; k < nodes.size(); ++k) {
        if (has(nodes[i], nodes[k]) && has(nodes[j], nodes[k])) ++total;
      }
    }
  }
  return total;
}

inline std::unordered_map<NodeId, std::uint64_t> exact_frequencies(
    std::span<const NodeId> stream) {
  std::unordered_map<NodeId, std::uint64_t> freq;
  for (NodeId item : stream) ++freq[item];
  return freq;
}

}  // namespace pimtc

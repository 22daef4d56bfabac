#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pimtc/edge.hpp"
#include "pimtc/rng.hpp"

namespace pimtc {

// Edges exactly as read: self-loops, duplicates and orientation preserved.
struct RawEdgeList {
  std::vector<std::pair<NodeId, NodeId>> edges;
};

// Preprocessed stream: u < v, no self-loops, no duplicates, seeded order.
struct EdgeList {
  std::vector<Edge> edges;
  NodeId max_node_id = 0;
};

namespace detail {

inline NodeId parse_node_token(std::string_view token, std::size_t line_no) {
  if (!token.empty() && token.front() == '-')
    throw ParseError("negative node id '" + std::string(token) + "'", line_no);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("malformed node id '" + std::string(token) + "'", line_no);
  if (value > kMaxNodeId)
    throw ParseError("node id " + std::to_string(value) + " exceeds 31-bit limit",
                     line_no);
  return static_cast<NodeId>(value);
}

}  // namespace detail

// Whitespace-separated COO text. Lines starting with '#' or '%' and blank
// lines are skipped; every other line must hold exactly two node ids.
inline RawEdgeList parse_coo(std::istream& in) {
  RawEdgeList out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);

    std::string_view tokens[3];
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < view.size()) {
      while (pos < view.size() && (view[pos] == ' ' || view[pos] == '\t')) ++pos;
      if (pos >= view.size()) break;
      std::size_t start = pos;
      while (pos < view.size() && view[pos] != ' ' && view[pos] != '\t') ++pos;
      if (count < 3) tokens[count] = view.substr(start, pos - start);
      ++count;
    }
    if (count == 0) continue;
    if (tokens[0].front() == '#' || tokens[0].front() == '%') continue;
    if (count != 2)
      throw ParseError("expected two node ids, found " + std::to_string(count) +
                           " tokens",
                       line_no);
    out.edges.emplace_back(detail::parse_node_token(tokens[0], line_no),
                           detail::parse_node_token(tokens[1], line_no));
  }
  return out;
}

// Drops self-loops, normalizes to u < v, dedups, then applies a seeded
// shuffle so the stream order is arbitrary but reproducible.
inline EdgeList preprocess(const RawEdgeList& raw, std::uint64_t seed) {
  EdgeList out;
  out.edges.reserve(raw.edges.size());
  for (auto [a, b] : raw.edges) {
    if (a == b) continue;
    out.edges.push_back(normalized(a, b));
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());

  Rng rng(derive_seed(seed, Stream::kShuffle));
  rng.shuffle(out.edges);

  for (const Edge& e : out.edges) out.max_node_id = std::max(out.max_node_id, e.v);
  return out;
}

inline EdgeList load_edge_list(const std::string& path, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  RawEdgeList raw = parse_coo(in);
  return preprocess(raw, seed);
}

// Contiguous views over the stream; sizes differ by at most one edge with the
// larger chunks first (7 edges in 3 chunks -> 3, 2, 2).
inline std::vector<std::span<const Edge>> split_chunks(std::span<const Edge> edges,
                                                       std::size_t chunk_count) {
  if (chunk_count == 0) throw ArgumentError("chunk count must be at least 1");
  std::vector<std::span<const Edge>> chunks;
  chunks.reserve(chunk_count);
  std::size_t base = edges.size() / chunk_count;
  std::size_t extra = edges.size() % chunk_count;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < chunk_count; ++i) {
    std::size_t len = base + (i < extra ? 1 : 0);
    chunks.push_back(edges.subspan(offset, len));
    offset += len;
  }
  return chunks;
}

}  // namespace pimtc

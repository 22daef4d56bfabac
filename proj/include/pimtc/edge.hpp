#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pimtc {

using NodeId = std::uint32_t;

// Node IDs are capped at 31 bits; the range above the graph's maximum ID is
// reserved for heavy-node remapping and must stay within the 32-bit core word.
inline constexpr NodeId kMaxNodeId = 0x7fffffffu;

// Undirected edge. After preprocessing u < v always holds, which makes the
// default lexicographic order exactly the (u, v) < (w, z) comparator the
// counting kernel relies on.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge normalized(NodeId a, NodeId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_number(line) {}

  std::size_t line_number;
};

}  // namespace pimtc

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "pimtc/edge.hpp"

namespace pimtc {

// Sorted color multiset {c1 <= c2 <= c3}. One simulated core per triplet;
// the core id is the triplet's rank in lexicographic order.
struct ColorTriplet {
  std::array<std::uint32_t, 3> colors{};

  bool monochromatic() const {
    return colors[0] == colors[2];
  }

  friend constexpr auto operator<=>(const ColorTriplet&, const ColorTriplet&) = default;
};

constexpr ColorTriplet make_triplet(std::uint32_t a, std::uint32_t b,
                                    std::uint32_t c) {
  ColorTriplet t{{a, b, c}};
  std::sort(t.colors.begin(), t.colors.end());
  return t;
}

// Multisets of size 3 over C colors: C(C+1)(C+2)/6.
constexpr std::uint64_t triplet_count(std::uint64_t colors) {
  return colors * (colors + 1) * (colors + 2) / 6;
}

constexpr std::uint64_t pair_count(std::uint64_t colors) {
  return colors * (colors + 1) / 2;
}

inline std::vector<ColorTriplet> enumerate_triplets(std::uint32_t colors) {
  if (colors == 0) throw ArgumentError("color count must be at least 1");
  std::vector<ColorTriplet> out;
  out.reserve(triplet_count(colors));
  for (std::uint32_t a = 0; a < colors; ++a)
    for (std::uint32_t b = a; b < colors; ++b)
      for (std::uint32_t c = b; c < colors; ++c)
        out.push_back(ColorTriplet{{a, b, c}});
  return out;
}

// Closed-form rank of a sorted triplet in the enumeration above.
constexpr std::uint64_t triplet_rank(const ColorTriplet& t, std::uint32_t colors) {
  std::uint64_t m = colors - t.colors[0];
  std::uint64_t d2 = t.colors[1] - t.colors[0];
  std::uint64_t d3 = t.colors[2] - t.colors[0];
  std::uint64_t before_first = triplet_count(colors) - triplet_count(m);
  std::uint64_t before_second = pair_count(m) - pair_count(m - d2);
  return before_first + before_second + (d3 - d2);
}

// Core ids of the C triplets that contain both endpoint colors, ascending.
// This is the full routing fan-out of one edge.
inline std::vector<std::uint64_t> compatible_cores(std::uint32_t cu, std::uint32_t cv,
                                                   std::uint32_t colors) {
  if (cu >= colors || cv >= colors)
    throw ArgumentError("endpoint color out of range");
  std::vector<std::uint64_t> cores;
  cores.reserve(colors);
  for (std::uint32_t w = 0; w < colors; ++w)
    cores.push_back(triplet_rank(make_triplet(cu, cv, w), colors));
  std::sort(cores.begin(), cores.end());
  return cores;
}

}  // namespace pimtc

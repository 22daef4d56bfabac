#pragma once

#include <cstdint>
#include <string>

#include "pimtc/edge.hpp"
#include "pimtc/rng.hpp"

namespace pimtc {

// 2^31 - 1, the default modulus; comfortably above any 31-bit node id except
// the very last one, in which case draw() moves to the next prime.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ull;

constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t i = 5; i * i <= n; i += 6) {
    if (n % i == 0 || n % (i + 2) == 0) return false;
  }
  return true;
}

constexpr std::uint64_t next_prime_above(std::uint64_t n) {
  std::uint64_t candidate = n + 1;
  while (!is_prime(candidate)) ++candidate;
  return candidate;
}

// Universal hash h(u) = ((mul * u + add) mod prime) mod colors. The modulus
// stays below 2^32 so the product fits a 64-bit word for any 31-bit node id.
struct ColoringParams {
  std::uint32_t colors = 1;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t mul = 1;
  std::uint64_t add = 0;

  void validate(NodeId max_node_id) const {
    if (colors == 0) throw ArgumentError("color count must be at least 1");
    if (prime > 0xffffffffull)
      throw ArgumentError("hash modulus must fit 32 bits, got " +
                          std::to_string(prime));
    if (!is_prime(prime))
      throw ArgumentError("hash modulus " + std::to_string(prime) +
                          " is not prime");
    if (prime <= max_node_id)
      throw ArgumentError("hash modulus " + std::to_string(prime) +
                          " must exceed the maximum node id " +
                          std::to_string(max_node_id));
    if (mul == 0 || mul >= prime)
      throw ArgumentError("hash multiplier must lie in [1, prime)");
    if (add >= prime) throw ArgumentError("hash offset must lie in [0, prime)");
  }

  static ColoringParams draw(std::uint32_t colors, NodeId max_node_id,
                             std::uint64_t seed) {
    ColoringParams p;
    p.colors = colors;
    p.prime = max_node_id < kDefaultPrime
                  ? kDefaultPrime
                  : next_prime_above(max_node_id);
    Rng rng(derive_seed(seed, Stream::kColoring));
    p.mul = 1 + rng.below(p.prime - 1);
    p.add = rng.below(p.prime);
    p.validate(max_node_id);
    return p;
  }
};

constexpr std::uint32_t color_of(NodeId node, const ColoringParams& p) {
  return static_cast<std::uint32_t>(((p.mul * node + p.add) % p.prime) % p.colors);
}

}  // namespace pimtc

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pimtc {

// splitmix64 finalizer. All randomness in the library goes through this so a
// fixed seed reproduces bit-identically across compilers and platforms;
// std::shuffle and the <random> distributions do not give that guarantee.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Independent deterministic stream per (seed, purpose, index).
enum class Stream : std::uint64_t {
  kShuffle = 1,
  kColoring = 2,
  kPartition = 3,
  kReservoir = 4,
  kSweep = 5,
  kSynth = 6,
};

constexpr std::uint64_t derive_seed(std::uint64_t seed, Stream stream,
                                    std::uint64_t index = 0) {
  std::uint64_t h = mix64(seed ^ (static_cast<std::uint64_t>(stream) << 56));
  return mix64(h ^ index);
}

class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 significant bits.
  constexpr double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound), unbiased via mask rejection.
  constexpr std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ull >> std::countl_zero(bound - 1);
    for (;;) {
      std::uint64_t r = next() & mask;
      if (r < bound) return r;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace pimtc

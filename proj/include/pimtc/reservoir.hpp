#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pimtc/edge.hpp"
#include "pimtc/rng.hpp"

namespace pimtc {

// Algorithm R over an edge stream. After t offers the buffer is a uniform
// M-subset of everything seen, which is what makes the estimator's
// M(M-1)(M-2) / t(t-1)(t-2) correction unbiased.
class ReservoirSample {
 public:
  ReservoirSample(std::uint64_t capacity, std::uint64_t seed)
      : capacity_(capacity), rng_(seed) {
    if (capacity < 3)
      throw ArgumentError("reservoir capacity must be at least 3");
  }

  void offer(Edge e) {
    ++offered_;
    if (offered_ <= capacity_) {
      edges_.push_back(e);
      return;
    }
    // One draw decides both: keep with probability M/t and pick the victim
    // uniformly.
    std::uint64_t slot = rng_.below(offered_);
    if (slot < capacity_) edges_[static_cast<std::size_t>(slot)] = e;
  }

  std::span<const Edge> edges() const { return edges_; }
  std::vector<Edge> snapshot() const { return edges_; }
  std::uint64_t offered() const { return offered_; }
  std::uint64_t capacity() const { return capacity_; }

 private:
  std::vector<Edge> edges_;
  std::uint64_t capacity_;
  std::uint64_t offered_ = 0;
  Rng rng_;
};

}  // namespace pimtc

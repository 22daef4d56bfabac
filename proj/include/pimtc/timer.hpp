#pragma once

#include <chrono>

namespace pimtc {

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}

  double elapsed_ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace pimtc

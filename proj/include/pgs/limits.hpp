#pragma once

#include <cstdint>

namespace pgs {

struct Limits {
  std::uint64_t max_order = 2'000'000;
  std::uint64_t decompose_bound = 20'000;
};

// Process-wide bounds consulted by every enumeration. Reads and writes are
// atomic; ScopedLimits restores the previous values on destruction.
Limits current_limits();
void set_limits(const Limits& limits);

class ScopedLimits {
 public:
  explicit ScopedLimits(const Limits& limits);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  Limits saved_;
};

}  // namespace pgs

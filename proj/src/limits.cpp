#include "pgs/limits.hpp"

#include <atomic>

namespace pgs {
namespace {

std::atomic<std::uint64_t> g_max_order{Limits{}.max_order};
std::atomic<std::uint64_t> g_decompose_bound{Limits{}.decompose_bound};

}  // namespace

Limits current_limits() {
  return Limits{g_max_order.load(), g_decompose_bound.load()};
}

void set_limits(const Limits& limits) {
  g_max_order.store(limits.max_order);
  g_decompose_bound.store(limits.decompose_bound);
}

ScopedLimits::ScopedLimits(const Limits& limits) : saved_(current_limits()) {
  set_limits(limits);
}

ScopedLimits::~ScopedLimits() { set_limits(saved_); }

}  // namespace pgs

#include "tf/limits.hpp"

#include "tf/errors.hpp"

namespace tf {

namespace {
thread_local ComputeLimits tl_limits;
}

ComputeLimits ComputeLimits::with_timeout(std::chrono::duration<double> budget, int degree_cap) {
  ComputeLimits limits;
  limits.deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
  limits.degree_cap = degree_cap;
  return limits;
}

const ComputeLimits& current_limits() { return tl_limits; }

ScopedLimits::ScopedLimits(const ComputeLimits& limits) : saved_(tl_limits) {
  ComputeLimits next = limits;
  if (saved_.deadline && (!next.deadline || *saved_.deadline < *next.deadline)) {
    next.deadline = saved_.deadline;
  }
  tl_limits = next;
}

ScopedLimits::~ScopedLimits() { tl_limits = saved_; }

void check_deadline() {
  if (tl_limits.deadline && std::chrono::steady_clock::now() > *tl_limits.deadline) {
    throw Timeout();
  }
}

void check_degree(int degree) {
  if (degree > tl_limits.degree_cap) throw DegreeCapExceeded(degree);
}

}  // namespace tf

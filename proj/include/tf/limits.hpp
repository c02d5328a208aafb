#pragma once

#include <chrono>
#include <optional>

namespace tf {

/// Resource limits honoured cooperatively by long computations running on
/// the current thread.
struct ComputeLimits {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  int degree_cap = 64;

  static ComputeLimits with_timeout(std::chrono::duration<double> budget, int degree_cap = 64);
};

const ComputeLimits& current_limits();

/// Installs limits for the lifetime of the guard and restores the previous
/// ones afterwards. Nested guards can only tighten a deadline.
class ScopedLimits {
 public:
  explicit ScopedLimits(const ComputeLimits& limits);
  ~ScopedLimits();
  ScopedLimits(const ScopedLimits&) = delete;
  ScopedLimits& operator=(const ScopedLimits&) = delete;

 private:
  ComputeLimits saved_;
};

/// Throws Timeout once the current deadline has passed.
void check_deadline();

/// Throws DegreeCapExceeded when `degree` is above the current cap.
void check_degree(int degree);

}  // namespace tf

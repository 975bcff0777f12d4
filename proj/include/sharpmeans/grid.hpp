#ifndef SHARPMEANS_GRID_HPP
#define SHARPMEANS_GRID_HPP

#include "sharpmeans/real.hpp"

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

namespace sharpmeans {

/// How grid kernels run. Parallel uses OpenMP; Serial is the reference
/// implementation. Both produce identical results element by element.
enum class Execution { Serial, Parallel };

struct Interval {
  Real lo;
  Real hi;
};

/// [1e-6, 1 - 1e-6]: where scans and extremum searches sample (0, 1).
Interval default_scan_interval(Real::Bits bits);

/// n >= 2 points from lo to hi inclusive, equally spaced.
std::vector<Real> uniform_grid(const Real& lo, const Real& hi, int n);
/// n >= 2 points from lo to hi inclusive (0 < lo < hi), equally spaced in ln x.
std::vector<Real> log_uniform_grid(const Real& lo, const Real& hi, int n);

/// Ascending grid on [lo, hi] inside (0, 1) that resolves both ends: the
/// first half is log-uniform in x on [lo, 1/2], the second half log-uniform
/// in 1 - x on [1/2, hi]; n points in total, sharing x = 1/2.
std::vector<Real> endpoint_weighted_grid(const Real& lo, const Real& hi, int n);

/// out[i] = fn(i) for i in [0, n). fn must be safe to call concurrently.
/// If any call throws, the exception with the lowest index is rethrown after
/// all iterations finish, so both execution modes fail the same way.
template <class Fn>
auto parallel_map(std::size_t n, const Fn& fn, Execution exec)
    -> std::vector<std::invoke_result_t<const Fn&, std::size_t>> {
  using R = std::invoke_result_t<const Fn&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        slots[i].emplace(fn(static_cast<std::size_t>(i)));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        slots[i].emplace(fn(static_cast<std::size_t>(i)));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// fn applied to every grid point.
template <class Fn>
auto map_grid(std::span<const Real> xs, const Fn& fn, Execution exec) {
  return parallel_map(xs.size(), [&](std::size_t i) { return fn(xs[i]); }, exec);
}

} // namespace sharpmeans

#endif // SHARPMEANS_GRID_HPP

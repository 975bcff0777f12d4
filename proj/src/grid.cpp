#include "sharpmeans/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace sharpmeans {

namespace {

void require_points(int n) {
  if (n < 2) throw std::invalid_argument("a grid needs at least two points");
}

} // namespace

Interval default_scan_interval(Real::Bits bits) {
  const Real edge = Real::parse("1e-6", bits);
  return {edge, 1L - edge};
}

std::vector<Real> uniform_grid(const Real& lo, const Real& hi, int n) {
  require_points(n);
  if (!(lo < hi)) throw std::invalid_argument("grid requires lo < hi");
  std::vector<Real> xs;
  xs.reserve(static_cast<std::size_t>(n));
  const Real step = (hi - lo) / static_cast<long>(n - 1);
  for (int i = 0; i < n - 1; ++i) xs.push_back(lo + step * static_cast<long>(i));
  xs.push_back(hi);
  return xs;
}

std::vector<Real> log_uniform_grid(const Real& lo, const Real& hi, int n) {
  require_points(n);
  if (!(lo > 0L) || !(lo < hi)) throw std::invalid_argument("log grid requires 0 < lo < hi");
  std::vector<Real> xs;
  xs.reserve(static_cast<std::size_t>(n));
  const Real log_lo = log(lo);
  const Real step = (log(hi) - log_lo) / static_cast<long>(n - 1);
  xs.push_back(lo);
  for (int i = 1; i < n - 1; ++i) xs.push_back(exp(log_lo + step * static_cast<long>(i)));
  xs.push_back(hi);
  return xs;
}

std::vector<Real> endpoint_weighted_grid(const Real& lo, const Real& hi, int n) {
  if (n < 4) throw std::invalid_argument("endpoint-weighted grid needs at least four points");
  if (!(lo > 0L) || !(hi < 1L) || !(lo < hi)) {
    throw std::invalid_argument("endpoint-weighted grid requires 0 < lo < hi < 1");
  }
  const Real::Bits prec = std::max(lo.precision(), hi.precision());
  const Real half(0.5, prec);
  std::vector<Real> xs;
  if (!(lo < half) || !(hi > half)) {
    return log_uniform_grid(lo, hi, n);
  }
  const int left = n / 2;
  const int right = n - left + 1; // its first point duplicates 1/2
  xs = log_uniform_grid(lo, half, left);
  // Mirror: log-uniform in 1 - x from 1/2 down to 1 - hi, visited in
  // ascending x.
  const std::vector<Real> gaps = log_uniform_grid(1L - hi, half, right);
  for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) {
    Real x = 1L - *it;
    if (!(x > xs.back())) continue;
    xs.push_back(std::move(x));
  }
  return xs;
}

} // namespace sharpmeans

#include "sharpmeans/context.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sharpmeans {

namespace {

void validate(int bits, const Real& series_threshold, const Real& root_tol, int scan_points) {
  if (bits < 53) {
    throw std::invalid_argument("precision must be at least 53 bits, got " + std::to_string(bits));
  }
  if (!(series_threshold > 0L) || !(series_threshold < 0.25)) {
    throw std::invalid_argument("series threshold must lie in (0, 1/4)");
  }
  if (!(root_tol > 0L)) {
    throw std::invalid_argument("root tolerance must be positive");
  }
  if (scan_points <= 0) {
    throw std::invalid_argument("scan point count must be positive");
  }
}

} // namespace

PrecisionContext::PrecisionContext(int bits)
    : bits_(bits),
      series_threshold_(Real::pow2(-(bits / 4), bits < 2 ? 2 : bits)),
      root_tol_(Real::pow2(-(bits / 2 + 8), bits < 2 ? 2 : bits)),
      scan_points_(kDefaultScanPoints) {
  validate(bits_, series_threshold_, root_tol_, scan_points_);
}

PrecisionContext::PrecisionContext(int bits, Real series_threshold, Real root_tol, int scan_points)
    : bits_(bits),
      series_threshold_(std::move(series_threshold)),
      root_tol_(std::move(root_tol)),
      scan_points_(scan_points) {
  validate(bits_, series_threshold_, root_tol_, scan_points_);
}

PrecisionContext PrecisionContext::with_root_tol(const Real& tol) const {
  return PrecisionContext(bits_, series_threshold_, tol, scan_points_);
}

PrecisionContext PrecisionContext::with_scan_points(int points) const {
  return PrecisionContext(bits_, series_threshold_, root_tol_, points);
}

PrecisionContext PrecisionContext::widened(int extra) const {
  const int bits = bits_ + extra;
  return PrecisionContext(bits, Real::pow2(-(bits / 4), bits), root_tol_.rounded(bits), scan_points_);
}

int PrecisionContext::printable_digits() const {
  return static_cast<int>(std::floor(bits_ * std::log10(2.0))) - 2;
}

} // namespace sharpmeans

#ifndef SHARPMEANS_CONTEXT_HPP
#define SHARPMEANS_CONTEXT_HPP

#include "sharpmeans/real.hpp"

#include <string_view>

namespace sharpmeans {

/// Working precision plus the tolerances derived from it.
///
/// Immutable once built. The defaults scale with `bits`: the near-diagonal
/// series branch engages below 2^-(bits/4), root brackets shrink to
/// 2^-(bits/2 + 8), and sign scans use 10^4 grid points.
class PrecisionContext {
public:
  static constexpr int kDefaultBits = 128;
  static constexpr int kDefaultScanPoints = 10000;
  /// Extra mantissa bits carried inside mean and auxiliary evaluations.
  static constexpr int kGuardBits = 24;

  explicit PrecisionContext(int bits = kDefaultBits);
  /// Throws std::invalid_argument unless bits >= 53,
  /// 0 < series_threshold < 1/4, root_tol > 0 and scan_points > 0.
  PrecisionContext(int bits, Real series_threshold, Real root_tol, int scan_points);

  int bits() const { return bits_; }
  Real::Bits working_bits() const { return bits_ + kGuardBits; }
  const Real& series_threshold() const { return series_threshold_; }
  const Real& root_tol() const { return root_tol_; }
  int scan_points() const { return scan_points_; }

  PrecisionContext with_root_tol(const Real& tol) const;
  PrecisionContext with_scan_points(int points) const;
  /// Same tolerances, `extra` more bits; used to build local oracles.
  PrecisionContext widened(int extra) const;

  Real real(double v) const { return Real(v, bits_); }
  Real real(long v) const { return Real(v, bits_); }
  Real parse(std::string_view text) const { return Real::parse(text, bits_); }
  Real pow2(long e) const { return Real::pow2(e, bits_); }

  /// |v| below noise_floor() * scale is treated as sign-undetermined.
  Real noise_floor() const { return Real::pow2(-(bits_ - 8), bits_); }
  /// Significant decimal digits that may be printed: floor(bits*log10(2)) - 2.
  int printable_digits() const;

private:
  int bits_;
  Real series_threshold_;
  Real root_tol_;
  int scan_points_;
};

} // namespace sharpmeans

#endif // SHARPMEANS_CONTEXT_HPP

#ifndef SHARPMEANS_ANALYSIS_HPP
#define SHARPMEANS_ANALYSIS_HPP

// Auxiliary functions behind the Neuman-Sandor vs power-mean comparison.
//
//   log_ratio       F_p(x) = ln N(1,x) - ln A_p(1,x)
//   slope_factor    f_p(x), with sgn F_p'(x) = sgn f_p(x) on (0,1)
//   kernel level 0  g(x),   with sgn f_p'(x) = sgn g(x) on (0,1)
//   kernel level k  the k-th derivative of g, as explicit sums of powers of x
//
// Each function has a tag usable by sign scans and the CLI: F, f, g, g1..g4.

#include "sharpmeans/context.hpp"
#include "sharpmeans/real.hpp"

#include <string>
#include <vector>

namespace sharpmeans {

/// A value together with the magnitude of the terms it was summed from.
/// Rounding error is proportional to `scale`, so the sign is only trusted
/// when |value| > noise_floor * scale.
struct AuxValue {
  Real value;
  Real scale;

  /// +1, -1, or 0 when the sign is below the noise floor.
  int sign(const PrecisionContext& ctx) const;
};

enum class AuxTag { LogRatio, SlopeFactor, Kernel, Kernel1, Kernel2, Kernel3, Kernel4 };

struct AuxFunctionId {
  AuxTag tag;
  Real p;

  /// "F", "f", "g", "g1", ... "g4".
  std::string tag_name() const;
  /// Inverse of tag_name(); throws std::invalid_argument.
  static AuxTag parse_tag(const std::string& name);
};

/// Evaluates the tagged function; x must be in its domain.
AuxValue evaluate_aux(const AuxFunctionId& id, const Real& x, const PrecisionContext& ctx);

// --- F -------------------------------------------------------------------

/// F_p(x) for x in (0, 1]; F_p(1) = 0. p = 0 uses the geometric mean.
/// Throws std::domain_error outside (0, 1].
AuxValue log_ratio(const Real& p, const Real& x, const PrecisionContext& ctx);
/// lim_{x->0+} F_p(x): ln2/p - ln ln(3 + 2 sqrt 2) for p > 0, +inf otherwise.
Real log_ratio_limit_at_zero(const Real& p, const PrecisionContext& ctx);
/// lim_{x->1-} F_p(x)/(x-1)^2 = -(3p - 4)/24.
Real log_ratio_curvature_at_one(const Real& p, const PrecisionContext& ctx);
/// Closed-form F_p'(x) = (x^{p-1}+1)/(x^p+1) * f_p(x) / ((x-1) ln(...)).
Real log_ratio_derivative(const Real& p, const Real& x, const PrecisionContext& ctx);

// --- f -------------------------------------------------------------------

/// f_p(x) for x in (0, 1]; f_p(1) = 0. Throws std::domain_error outside.
AuxValue slope_factor(const Real& p, const Real& x, const PrecisionContext& ctx);
/// Piecewise limit at 0+: ln(sqrt2 - 1) + sqrt2 (p > 1), + sqrt2/2 (p = 1),
/// + 0 (p < 1).
Real slope_factor_limit_at_zero(const Real& p, const PrecisionContext& ctx);
/// lim_{x->1-} f_p(x)/(1-x)^3 = (p - 4/3)/8.
Real slope_factor_cubic_limit_at_one(const Real& p, const PrecisionContext& ctx);
/// Closed-form f_p'(x) = sqrt2 (1-x) x^p g(x) / ((x^2+1)^{3/2} (x+1)^2 (x+x^p)^2).
Real slope_factor_derivative(const Real& p, const Real& x, const PrecisionContext& ctx);

// --- g and its derivatives ------------------------------------------------

template <class S>
struct PowerTerm {
  S coefficient;
  S exponent;
};

inline Real unit_like(const Real& p) { return Real(1L, p.precision()); }
template <class S>
S unit_like(const S&) { return S(1); }

/// Terms of the kernel's level-th derivative (0 <= level <= 4), transcribed
/// term by term. Level 4 is stored divided by (p - 1); see kernel_prefactor.
/// Works for any field type S (Real, mpq_class, ...).
template <class S>
std::vector<PowerTerm<S>> kernel_terms(int level, const S& p) {
  const S one = unit_like(p);
  auto k = [&](long v) -> S { return one * v; };
  using T = PowerTerm<S>;
  switch (level) {
  case 0:
    return {T{k(1), p + k(2)},         T{k(1), p + k(1)},       T{k(2), p},
            T{k(-1), k(2) - p},        T{k(-1), k(3) - p},      T{k(-2), k(4) - p},
            T{p - k(1), k(4)},         T{k(-1), k(3)},          T{k(1), k(1)},
            T{k(1) - p, k(0)}};
  case 1:
    return {T{p + k(2), p + k(1)},           T{p + k(1), p},
            T{k(2) * p, p - k(1)},           T{p - k(2), k(1) - p},
            T{p - k(3), k(2) - p},           T{k(2) * (p - k(4)), k(3) - p},
            T{k(4) * (p - k(1)), k(3)},      T{k(-3), k(2)},
            T{k(1), k(0)}};
  case 2:
    return {T{(p + k(1)) * (p + k(2)), p},
            T{p * (p + k(1)), p - k(1)},
            T{k(2) * p * (p - k(1)), p - k(2)},
            T{k(-1) * (p - k(1)) * (p - k(2)), k(0) - p},
            T{k(-1) * (p - k(2)) * (p - k(3)), k(1) - p},
            T{k(-2) * (p - k(3)) * (p - k(4)), k(2) - p},
            T{k(12) * (p - k(1)), k(2)},
            T{k(-6), k(1)}};
  case 3:
    return {T{p * (p + k(1)) * (p + k(2)), p - k(1)},
            T{p * (p - k(1)) * (p + k(1)), p - k(2)},
            T{k(2) * p * (p - k(1)) * (p - k(2)), p - k(3)},
            T{p * (p - k(1)) * (p - k(2)), k(-1) - p},
            T{(p - k(1)) * (p - k(2)) * (p - k(3)), k(0) - p},
            T{k(2) * (p - k(2)) * (p - k(3)) * (p - k(4)), k(1) - p},
            T{k(24) * (p - k(1)), k(1)},
            T{k(-6), k(0)}};
  case 4:
    return {T{p * (p + k(1)) * (p + k(2)), p - k(2)},
            T{p * (p + k(1)) * (p - k(2)), p - k(3)},
            T{k(2) * p * (p - k(2)) * (p - k(3)), p - k(4)},
            T{k(-1) * p * (p + k(1)) * (p - k(2)), k(-2) - p},
            T{k(-1) * p * (p - k(2)) * (p - k(3)), k(-1) - p},
            T{k(-2) * (p - k(2)) * (p - k(3)) * (p - k(4)), k(0) - p},
            T{k(24), k(0)}};
  default:
    return {};
  }
}

/// Common factor in front of the level's term sum: (p - 1) for level 4.
template <class S>
S kernel_prefactor(int level, const S& p) {
  return level == 4 ? S(p - unit_like(p)) : unit_like(p);
}

/// The level-th derivative at x = 1: prefactor times the sum of coefficients.
template <class S>
S kernel_value_at_one(int level, const S& p) {
  S sum = unit_like(p) * 0L;
  for (const auto& term : kernel_terms(level, p)) sum = sum + term.coefficient;
  return kernel_prefactor(level, p) * sum;
}

/// 8p^3 - 30p^2 + 94p - 84, the closed form of g'''(1).
template <class S>
S cubic_endpoint_polynomial(const S& p) {
  const S one = unit_like(p);
  return ((one * 8L * p - one * 30L) * p + one * 94L) * p - one * 84L;
}

/// g^(level)(x) for x in (0, 1); throws std::domain_error at or beyond the
/// endpoints and std::invalid_argument for a level outside 0..4.
AuxValue kernel(int level, const Real& p, const Real& x, const PrecisionContext& ctx);

struct KernelEndpoints {
  Real at_zero;      ///< g(0+) = 1 - p
  Real first_at_one; ///< g'(1) = 4(3p - 4)
  Real second_at_one;///< g''(1) = 12(3p - 4)
  Real third_at_one; ///< g'''(1) = 8p^3 - 30p^2 + 94p - 84
};
KernelEndpoints kernel_endpoint_values(const Real& p, const PrecisionContext& ctx);

/// 3 g(x^3) at p = 4/3 minus (x-1)^3 (x+1)(x^8+2x^7+7x^6+9x^5+9x^4+9x^3+7x^2+2x+1).
Real kernel_factorization_residual(const Real& x, const PrecisionContext& ctx);

} // namespace sharpmeans

#endif // SHARPMEANS_ANALYSIS_HPP

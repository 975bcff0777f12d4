#ifndef SHARPMEANS_SHARP_CONSTANTS_HPP
#define SHARPMEANS_SHARP_CONSTANTS_HPP

// Best power-mean exponents and constant factors for a bivariate mean M,
// normalised to M(1, x) with x in (0, 1).

#include "sharpmeans/context.hpp"
#include "sharpmeans/grid.hpp"
#include "sharpmeans/means.hpp"
#include "sharpmeans/real.hpp"
#include "sharpmeans/roots.hpp"

#include <optional>
#include <stdexcept>

namespace sharpmeans {

/// ln 2 / ln ln(3 + 2 sqrt 2): the greatest p with A_p < N off the diagonal.
Real lower_power_exponent(const PrecisionContext& ctx);
/// 4/3: the least p with N < A_p off the diagonal.
Real upper_power_exponent(const PrecisionContext& ctx);
/// 2^{3/4} / ln(3 + 2 sqrt 2): the best factor in  factor * A_{4/3} < N.
Real upper_exponent_factor(const PrecisionContext& ctx);
/// exp F at the interior maximiser: the best factor in  N < factor * A_{p}
/// with p = lower_power_exponent().
Real lower_exponent_factor(const PrecisionContext& ctx);

/// Bracket of the unique zero of the slope factor f_p in (0, 1), located on
/// a 1024-point grid over [1e-6, 1 - 1e-6] and refined by bisection to
/// ctx.root_tol(). Throws NoSignChange if f_p keeps one sign on the grid.
RootBracket locate_slope_root(const Real& p, const PrecisionContext& ctx);
/// locate_slope_root at p = lower_power_exponent(): the point where N/A_p peaks.
RootBracket interior_maximizer_bracket(const PrecisionContext& ctx);

/// Raised when the limit M(1, 0+) needed for an exponent candidate does not
/// exist as a finite closed form.
class EndpointUndefined : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exponents at which ln(M / A_p)(1, x) changes behaviour.
///
/// `diagonal` is where the quadratic coefficient of ln(M/A_p)(1, 1 - d)
/// vanishes, estimated by Richardson extrapolation from d = 1e-3 and 1e-4.
/// `endpoint` is ln 2 / (-ln M(1, 0+)), present only when 0 < M(1, 0+) < 1.
struct ExponentCandidates {
  Real diagonal;
  std::optional<Real> endpoint;
};
ExponentCandidates sharp_exponent_candidates(const MeanKind& kind, const PrecisionContext& ctx);

/// Richardson estimate of lim_{d->0} ln(M/A_p)(1, 1-d) / d^2.
Real diagonal_coefficient(const MeanKind& kind, const Real& p, const PrecisionContext& ctx);

/// alpha_upper * A_{p_upper} <= M <= beta_lower * A_{p_lower} on (0, 1),
/// with p_upper / p_lower the larger / smaller exponent candidate and the
/// factors the infimum / supremum of the ratios (grid search with golden
/// refinement, compared against both endpoint limits).
struct SharpBoundReport {
  MeanKind mean;
  Real p_upper;
  Real p_lower;
  Real alpha_upper;
  Real beta_lower;
  /// Interior point where the infimum of M/A_{p_upper} is attained, if any.
  std::optional<Real> upper_extremizer;
  /// Interior point where the supremum of M/A_{p_lower} is attained, if any.
  std::optional<Real> lower_extremizer;
};
SharpBoundReport sharp_bound_report(const MeanKind& kind, const PrecisionContext& ctx,
                                    Execution exec = Execution::Parallel);

} // namespace sharpmeans

#endif // SHARPMEANS_SHARP_CONSTANTS_HPP

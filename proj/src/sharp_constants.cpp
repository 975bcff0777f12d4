#include "sharpmeans/sharp_constants.hpp"

#include "sharpmeans/analysis.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace sharpmeans {

namespace {

constexpr int kSlopeRootGrid = 1024;
constexpr int kMaxBracketDoublings = 10;

// ln M(1,x) - ln A_p(1,x), computed at the guarded precision of ctx.
Real log_ratio_to_power(const MeanKind& kind, const Real& p, const Real& x,
                        const PrecisionContext& wide) {
  const PositivePair pair(Real(1L, wide.bits()), x.rounded(wide.bits()));
  return log_mean_eval(kind, pair, wide) - log_mean_eval(MeanKind::power(p), pair, wide);
}

// lim_{x->0+} ln(M/A_p)(1, x); empty when it is an indeterminate 0 * inf.
std::optional<Real> log_ratio_at_zero(const Real& m0, const Real& p, const PrecisionContext& ctx) {
  const Real::Bits w = ctx.working_bits();
  if (p > 0L) {
    if (m0.is_zero()) return Real::infinity(w, -1);
    return log(m0.rounded(w)) + Real::ln2(w) / p.rounded(w);
  }
  // A_p(1, 0+) = 0 for p <= 0.
  if (m0.is_zero()) return std::nullopt;
  return Real::infinity(w);
}

struct RatioExtremes {
  Real value;
  std::optional<Real> at;
};

// inf (find_max = false) or sup of ln(M/A_p)(1, x) over (0, 1): grid search,
// golden refinement around an interior winner, then comparison with the
// endpoint limits 0 (x -> 1) and `at_zero`.
RatioExtremes ratio_extreme(const MeanKind& kind, const Real& p, const std::optional<Real>& at_zero,
                            bool find_max, const PrecisionContext& ctx, Execution exec) {
  const PrecisionContext wide = ctx.widened(PrecisionContext::kGuardBits);
  const Interval span = default_scan_interval(wide.bits());
  const std::vector<Real> xs = endpoint_weighted_grid(span.lo, span.hi, ctx.scan_points());
  const auto fn = [&](const Real& x) { return log_ratio_to_power(kind, p, x, wide); };
  const std::vector<Real> vs = map_grid(std::span<const Real>(xs), fn, exec);

  std::size_t best = 0;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (find_max ? vs[i] > vs[best] : vs[i] < vs[best]) best = i;
  }
  Extremum interior{xs[best], vs[best]};
  const bool inside = best > 0 && best + 1 < xs.size();
  if (inside) {
    const int iters = 2 * ctx.bits();
    interior = find_max ? golden_section_maximize(fn, xs[best - 1], xs[best + 1], ctx.root_tol(), iters)
                        : golden_section_minimize(fn, xs[best - 1], xs[best + 1], ctx.root_tol(), iters);
  }

  Real edge(0L, wide.bits()); // the x -> 1 limit
  if (at_zero) edge = find_max ? max(edge, *at_zero) : min(edge, *at_zero);

  const Real margin = ctx.noise_floor() * (abs(interior.value) + 1L);
  const bool interior_wins = find_max ? interior.value > edge + margin : interior.value < edge - margin;
  if (interior_wins && inside) return {interior.value, interior.x.rounded(ctx.bits())};
  return {find_max ? max(edge, interior.value) : min(edge, interior.value), std::nullopt};
}

Real richardson_estimate(const MeanKind& kind, const Real& p, const PrecisionContext& wide) {
  auto quotient = [&](const char* delta_text) {
    const Real delta = Real::parse(delta_text, wide.bits());
    return log_ratio_to_power(kind, p, 1L - delta, wide) / (delta * delta);
  };
  const Real coarse = quotient("1e-3");
  const Real fine = quotient("1e-4");
  return (fine * 10L - coarse) / 9L;
}

} // namespace

Real lower_power_exponent(const PrecisionContext& ctx) {
  const Real::Bits w = ctx.working_bits();
  return (Real::ln2(w) / log(asinh(Real(1L, w)) * 2L)).rounded(ctx.bits());
}

Real upper_power_exponent(const PrecisionContext& ctx) {
  return Real(4L, ctx.bits()) / 3L;
}

Real upper_exponent_factor(const PrecisionContext& ctx) {
  const Real::Bits w = ctx.working_bits();
  const Real p = Real(4L, w) / 3L;
  return exp(log_ratio_limit_at_zero(p, ctx.widened(PrecisionContext::kGuardBits))).rounded(ctx.bits());
}

Real lower_exponent_factor(const PrecisionContext& ctx) {
  const PrecisionContext wide = ctx.widened(PrecisionContext::kGuardBits);
  const RootBracket where = interior_maximizer_bracket(wide);
  const Real p = lower_power_exponent(wide);
  return exp(log_ratio(p, where.midpoint(), wide).value).rounded(ctx.bits());
}

RootBracket locate_slope_root(const Real& p, const PrecisionContext& ctx) {
  const Interval span = default_scan_interval(ctx.bits());
  const std::vector<Real> xs = uniform_grid(span.lo, span.hi, kSlopeRootGrid);
  auto fn = [&](const Real& x) {
    AuxValue v = slope_factor(p, x, ctx);
    const int s = v.sign(ctx);
    return SignedValue{std::move(v.value), s};
  };
  std::optional<std::size_t> last;
  SignedValue prev{Real(ctx.bits()), 0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    SignedValue v = fn(xs[i]);
    if (v.sign == 0) continue;
    if (last && v.sign != prev.sign) {
      RootBracket start{xs[*last], xs[i], prev.value, v.value};
      return bisect(fn, std::move(start), ctx.root_tol(), 2 * ctx.bits());
    }
    last = i;
    prev = std::move(v);
  }
  throw NoSignChange("f_p has no sign change on [1e-6, 1 - 1e-6] for p = " + p.to_string(12));
}

RootBracket interior_maximizer_bracket(const PrecisionContext& ctx) {
  return locate_slope_root(lower_power_exponent(ctx), ctx);
}

Real diagonal_coefficient(const MeanKind& kind, const Real& p, const PrecisionContext& ctx) {
  const PrecisionContext wide = ctx.widened(PrecisionContext::kGuardBits);
  return richardson_estimate(kind, p.rounded(wide.bits()), wide).rounded(ctx.bits());
}

ExponentCandidates sharp_exponent_candidates(const MeanKind& kind, const PrecisionContext& ctx) {
  const std::optional<Real> m0 = mean_limit_at_zero(kind, ctx);
  if (!m0) throw EndpointUndefined("M(1, 0+) is undefined for " + kind.name());

  // The quadratic coefficient decreases in p; bracket its zero and bisect.
  auto coefficient = [&](const Real& p) {
    Real c = diagonal_coefficient(kind, p, ctx);
    const int s = c.sign();
    return SignedValue{std::move(c), s};
  };
  Real lo(-4L, ctx.bits());
  Real hi(4L, ctx.bits());
  SignedValue c_lo = coefficient(lo);
  SignedValue c_hi = coefficient(hi);
  for (int i = 0; i < kMaxBracketDoublings && !(c_lo.sign > 0 && c_hi.sign < 0); ++i) {
    if (c_lo.sign <= 0) {
      lo *= Real(2L, ctx.bits());
      c_lo = coefficient(lo);
    }
    if (c_hi.sign >= 0) {
      hi *= Real(2L, ctx.bits());
      c_hi = coefficient(hi);
    }
  }
  if (!(c_lo.sign > 0 && c_hi.sign < 0)) {
    throw NoSignChange("no diagonal exponent found for " + kind.name());
  }
  const RootBracket b = bisect(coefficient, RootBracket{lo, hi, c_lo.value, c_hi.value},
                               ctx.root_tol(), 2 * ctx.bits());

  ExponentCandidates out{b.midpoint(), std::nullopt};
  if (m0->sign() > 0 && *m0 < 1L) {
    const Real::Bits w = ctx.working_bits();
    out.endpoint = (Real::ln2(w) / -log(m0->rounded(w))).rounded(ctx.bits());
  }
  return out;
}

SharpBoundReport sharp_bound_report(const MeanKind& kind, const PrecisionContext& ctx, Execution exec) {
  const ExponentCandidates c = sharp_exponent_candidates(kind, ctx);
  Real p_upper = c.diagonal;
  Real p_lower = c.diagonal;
  if (c.endpoint) {
    p_upper = max(p_upper, *c.endpoint);
    p_lower = min(p_lower, *c.endpoint);
  }
  const Real m0 = *mean_limit_at_zero(kind, ctx);
  const RatioExtremes low = ratio_extreme(kind, p_upper, log_ratio_at_zero(m0, p_upper, ctx), false, ctx, exec);
  const RatioExtremes high = ratio_extreme(kind, p_lower, log_ratio_at_zero(m0, p_lower, ctx), true, ctx, exec);
  return SharpBoundReport{kind,
                          p_upper,
                          p_lower,
                          exp(low.value).rounded(ctx.bits()),
                          exp(high.value).rounded(ctx.bits()),
                          low.at,
                          high.at};
}

} // namespace sharpmeans

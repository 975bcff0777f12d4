#include "sharpmeans/analysis.hpp"

#include "sharpmeans/means.hpp"

#include <stdexcept>

namespace sharpmeans {

namespace {

void require_unit_interval(const Real& x, const char* what) {
  if (!x.is_finite() || !(x > 0L) || !(x <= 1L)) {
    throw std::domain_error(std::string(what) + " is defined for x in (0, 1]");
  }
}

void require_open_unit_interval(const Real& x) {
  if (!x.is_finite() || !(x > 0L) || !(x < 1L)) {
    throw std::domain_error("kernel functions are defined for x in (0, 1)");
  }
}

AuxValue zero_value(const PrecisionContext& ctx) {
  return {Real(0L, ctx.bits()), Real(1L, ctx.bits())};
}

// asinh((x-1)/(x+1)) = ln((x - 1 + sqrt(2(x^2+1)))/(x+1)), without the
// cancellation the logarithmic form suffers near x = 1.
Real half_angle_asinh(const Real& x) { return asinh((x - 1L) / (x + 1L)); }

struct SlopeTerms {
  Real first;
  Real second;
};

SlopeTerms slope_terms(const Real& p, const Real& x) {
  const Real first = half_angle_asinh(x);
  const Real ratio = (pow(x, p) + 1L) / (pow(x, p - 1L) + 1L);
  const Real second = sqrt(Real(2L, x.precision())) * (x - 1L) * ratio /
                      ((x + 1L) * sqrt(x * x + 1L));
  return {first, second};
}

} // namespace

int AuxValue::sign(const PrecisionContext& ctx) const {
  if (!value.is_finite()) return value.is_nan() ? 0 : value.sign();
  if (abs(value) <= ctx.noise_floor() * scale) return 0;
  return value.sign() > 0 ? 1 : -1;
}

std::string AuxFunctionId::tag_name() const {
  switch (tag) {
  case AuxTag::LogRatio: return "F";
  case AuxTag::SlopeFactor: return "f";
  case AuxTag::Kernel: return "g";
  case AuxTag::Kernel1: return "g1";
  case AuxTag::Kernel2: return "g2";
  case AuxTag::Kernel3: return "g3";
  case AuxTag::Kernel4: return "g4";
  }
  return "?";
}

AuxTag AuxFunctionId::parse_tag(const std::string& name) {
  if (name == "F") return AuxTag::LogRatio;
  if (name == "f") return AuxTag::SlopeFactor;
  if (name == "g") return AuxTag::Kernel;
  if (name == "g1") return AuxTag::Kernel1;
  if (name == "g2") return AuxTag::Kernel2;
  if (name == "g3") return AuxTag::Kernel3;
  if (name == "g4") return AuxTag::Kernel4;
  throw std::invalid_argument("unknown function '" + name + "' (expected F, f, g, g1..g4)");
}

AuxValue evaluate_aux(const AuxFunctionId& id, const Real& x, const PrecisionContext& ctx) {
  switch (id.tag) {
  case AuxTag::LogRatio: return log_ratio(id.p, x, ctx);
  case AuxTag::SlopeFactor: return slope_factor(id.p, x, ctx);
  case AuxTag::Kernel: return kernel(0, id.p, x, ctx);
  case AuxTag::Kernel1: return kernel(1, id.p, x, ctx);
  case AuxTag::Kernel2: return kernel(2, id.p, x, ctx);
  case AuxTag::Kernel3: return kernel(3, id.p, x, ctx);
  case AuxTag::Kernel4: return kernel(4, id.p, x, ctx);
  }
  throw std::logic_error("unknown auxiliary function");
}

AuxValue log_ratio(const Real& p, const Real& x, const PrecisionContext& ctx) {
  require_unit_interval(x, "F");
  if (x == 1L) return zero_value(ctx);
  const Real::Bits w = ctx.working_bits();
  const Real one(1L, w);
  const Real xw = x.rounded(w);
  const Real log_n = log(detail::neuman_sandor(one, xw, ctx.series_threshold().rounded(w)));
  const Real log_a = detail::log_power_mean(one, xw, p.rounded(w));
  return {(log_n - log_a).rounded(ctx.bits()),
          (abs(log_n) + abs(log_a) + 1L).rounded(ctx.bits())};
}

Real log_ratio_limit_at_zero(const Real& p, const PrecisionContext& ctx) {
  if (!(p > 0L)) return Real::infinity(ctx.bits());
  const Real::Bits w = ctx.working_bits();
  const Real log_n0 = log(asinh(Real(1L, w)) * 2L); // ln ln(3 + 2 sqrt 2)
  return (Real::ln2(w) / p.rounded(w) - log_n0).rounded(ctx.bits());
}

Real log_ratio_curvature_at_one(const Real& p, const PrecisionContext& ctx) {
  const Real pw = p.rounded(ctx.working_bits());
  return (-(pw * 3L - 4L) / 24L).rounded(ctx.bits());
}

Real log_ratio_derivative(const Real& p, const Real& x, const PrecisionContext& ctx) {
  require_unit_interval(x, "F'");
  if (x == 1L) return Real(0L, ctx.bits());
  const Real::Bits w = ctx.working_bits();
  const Real xw = x.rounded(w);
  const Real pw = p.rounded(w);
  const SlopeTerms t = slope_terms(pw, xw);
  const Real weight = (pow(xw, pw - 1L) + 1L) / (pow(xw, pw) + 1L);
  return (weight * (t.first - t.second) / ((xw - 1L) * t.first)).rounded(ctx.bits());
}

AuxValue slope_factor(const Real& p, const Real& x, const PrecisionContext& ctx) {
  require_unit_interval(x, "f");
  if (x == 1L) return zero_value(ctx);
  const Real::Bits w = ctx.working_bits();
  const SlopeTerms t = slope_terms(p.rounded(w), x.rounded(w));
  return {(t.first - t.second).rounded(ctx.bits()),
          (abs(t.first) + abs(t.second)).rounded(ctx.bits())};
}

Real slope_factor_limit_at_zero(const Real& p, const PrecisionContext& ctx) {
  const Real::Bits w = ctx.working_bits();
  const Real root2 = sqrt(Real(2L, w));
  Real value = log(root2 - 1L);
  if (p > 1L) {
    value += root2;
  } else if (p == 1L) {
    value += root2 / 2L;
  }
  return value.rounded(ctx.bits());
}

Real slope_factor_cubic_limit_at_one(const Real& p, const PrecisionContext& ctx) {
  const Real pw = p.rounded(ctx.working_bits());
  return ((pw - Real(4L, pw.precision()) / 3L) / 8L).rounded(ctx.bits());
}

Real slope_factor_derivative(const Real& p, const Real& x, const PrecisionContext& ctx) {
  require_unit_interval(x, "f'");
  if (x == 1L) return Real(0L, ctx.bits());
  const Real::Bits w = ctx.working_bits();
  const Real xw = x.rounded(w);
  const Real pw = p.rounded(w);
  const Real xp = pow(xw, pw);
  const Real sq = xw * xw + 1L;
  const Real sum = xw + xp;
  const Real denom = sq * sqrt(sq) * (xw + 1L) * (xw + 1L) * sum * sum;
  const Real g = kernel(0, p, x, ctx.widened(PrecisionContext::kGuardBits)).value;
  return (sqrt(Real(2L, w)) * (1L - xw) * xp * g / denom).rounded(ctx.bits());
}

AuxValue kernel(int level, const Real& p, const Real& x, const PrecisionContext& ctx) {
  if (level < 0 || level > 4) throw std::invalid_argument("kernel level must be 0..4");
  require_open_unit_interval(x);
  const Real::Bits w = ctx.working_bits();
  const Real pw = p.rounded(w);
  const Real xw = x.rounded(w);
  Real sum(0L, w);
  Real magnitude(0L, w);
  for (const auto& term : kernel_terms(level, pw)) {
    const Real v = term.coefficient * pow(xw, term.exponent);
    sum += v;
    magnitude += abs(v);
  }
  const Real pre = kernel_prefactor(level, pw);
  return {(pre * sum).rounded(ctx.bits()), (abs(pre) * magnitude).rounded(ctx.bits())};
}

KernelEndpoints kernel_endpoint_values(const Real& p, const PrecisionContext& ctx) {
  const Real pw = p.rounded(ctx.working_bits());
  const Real slope = pw * 3L - 4L;
  return {(1L - pw).rounded(ctx.bits()), (slope * 4L).rounded(ctx.bits()),
          (slope * 12L).rounded(ctx.bits()), cubic_endpoint_polynomial(pw).rounded(ctx.bits())};
}

Real kernel_factorization_residual(const Real& x, const PrecisionContext& ctx) {
  const Real::Bits w = ctx.working_bits();
  const Real xw = x.rounded(w);
  const Real cube = xw * xw * xw;
  const Real p = Real(4L, w) / 3L;
  const Real lhs = kernel(0, p, cube, ctx.widened(PrecisionContext::kGuardBits)).value * 3L;
  // x^8 + 2x^7 + 7x^6 + 9x^5 + 9x^4 + 9x^3 + 7x^2 + 2x + 1 by Horner.
  static constexpr long kOctic[] = {1, 2, 7, 9, 9, 9, 7, 2, 1};
  Real octic(0L, w);
  for (long c : kOctic) octic = octic * xw + c;
  const Real d = xw - 1L;
  const Real rhs = d * d * d * (xw + 1L) * octic;
  return (lhs - rhs).rounded(ctx.bits());
}

} // namespace sharpmeans

#include "sharpmeans/means.hpp"

#include <algorithm>
#include <stdexcept>

namespace sharpmeans {

namespace {

constexpr int kMaxSeriesTerms = 100000;

// phi(t)/t - 1 summed from its second Maclaurin term; stops once a term drops
// below 2^-prec relative to the running sum (plus the leading 1).
Real odd_series_tail(detail::OddFunction fn, const Real& t) {
  using detail::OddFunction;
  const Real::Bits prec = t.precision();
  const Real t2 = t * t;
  const Real eps = Real::pow2(-static_cast<long>(prec), prec);
  Real coef(1L, prec);
  Real power(1L, prec);
  Real tail(prec);
  for (long n = 0; n < kMaxSeriesTerms; ++n) {
    const long odd = 2 * n + 1;
    switch (fn) {
    case OddFunction::Asinh:
      coef = -(coef * (odd * odd)) / (2 * (n + 1) * (odd + 2));
      break;
    case OddFunction::Asin:
      coef = (coef * (odd * odd)) / (2 * (n + 1) * (odd + 2));
      break;
    case OddFunction::Atan:
      coef = -(coef * odd) / (odd + 2);
      break;
    case OddFunction::Atanh:
      coef = (coef * odd) / (odd + 2);
      break;
    }
    power = power * t2;
    const Real term = coef * power;
    tail += term;
    if (abs(term) < eps * (abs(tail) + 1L)) break;
  }
  return tail;
}

Real apply(detail::OddFunction fn, const Real& t) {
  using detail::OddFunction;
  switch (fn) {
  case OddFunction::Asinh: return asinh(t);
  case OddFunction::Asin: return asin(t);
  case OddFunction::Atan: return atan(t);
  case OddFunction::Atanh: return atanh(t);
  }
  return Real::nan(t.precision());
}

// t / phi(t), with the removable singularity at t = 0 handled by the series.
Real t_over_phi(detail::OddFunction fn, const Real& t, const Real& threshold) {
  if (t.is_zero()) return Real(1L, t.precision());
  if (abs(t) < threshold) return 1L / detail::odd_function_over_t_series(fn, t);
  return t / apply(fn, t);
}

struct Lifted {
  Real a;
  Real b;
  Real threshold;
};

Lifted lift(const PositivePair& pair, const PrecisionContext& ctx) {
  const Real::Bits w = ctx.working_bits();
  return {pair.a().rounded(w), pair.b().rounded(w), ctx.series_threshold().rounded(w)};
}

Real arithmetic(const Real& a, const Real& b) { return (a + b) / 2L; }

// (a - b) / (a + b)
Real diagonal_offset(const Real& a, const Real& b) { return (a - b) / (a + b); }

Real seiffert_p_w(const Real& a, const Real& b, const Real& thr) {
  if (a == b) return a;
  return arithmetic(a, b) * t_over_phi(detail::OddFunction::Asin, diagonal_offset(a, b), thr);
}

// 4 arctan sqrt(a/b) - pi = 4 arctan u with u = (sqrt a - sqrt b)/(sqrt a + sqrt b),
// and (a - b) / (4u) = ((sqrt a + sqrt b)/2)^2, so no difference of nearly equal
// angles is ever formed.
Real seiffert_p_arctan_w(const Real& a, const Real& b, const Real& thr) {
  if (a == b) return a;
  const Real root_sum = sqrt(a) + sqrt(b);
  const Real u = (a - b) / (root_sum * root_sum);
  const Real half = root_sum / 2L;
  return half * half * t_over_phi(detail::OddFunction::Atan, u, thr);
}

Real seiffert_t_w(const Real& a, const Real& b, const Real& thr) {
  if (a == b) return a;
  return arithmetic(a, b) * t_over_phi(detail::OddFunction::Atan, diagonal_offset(a, b), thr);
}

Real logarithmic_w(const Real& a, const Real& b, const Real& thr) {
  if (a == b) return a;
  return arithmetic(a, b) * t_over_phi(detail::OddFunction::Atanh, diagonal_offset(a, b), thr);
}

// ln I = ln A + atanh(t)/t - 1 + log1p(-t^2)/2 with A = (a+b)/2, t = (a-b)/(a+b).
Real log_identric_w(const Real& a, const Real& b, const Real& thr) {
  if (a == b) return log(a);
  const Real t = diagonal_offset(a, b);
  const Real tail = abs(t) < thr ? odd_series_tail(detail::OddFunction::Atanh, t)
                                 : atanh(t) / t - 1L;
  return log(arithmetic(a, b)) + tail + log1p(-(t * t)) / 2L;
}

Real neuman_sandor_log_w(const Real& a, const Real& b) {
  if (a == b) return a;
  const Real d = a - b;
  const Real s = a + b;
  const Real root = sqrt((a * a + b * b) * 2L);
  // (d + root)/s - 1 rewritten so that root - s never cancels.
  const Real w = (d + d * d / (root + s)) / s;
  return d / (log1p(w) * 2L);
}

Real eval_w(const MeanKind& kind, const Real& a, const Real& b, const Real& thr) {
  using F = MeanKind::Family;
  switch (kind.family()) {
  case F::Power: return detail::power_mean(a, b, kind.order()->rounded(a.precision()));
  case F::Geometric: return detail::power_mean(a, b, Real(0L, a.precision()));
  case F::Arithmetic: return detail::power_mean(a, b, Real(1L, a.precision()));
  case F::Quadratic: return detail::power_mean(a, b, Real(2L, a.precision()));
  case F::Logarithmic: return logarithmic_w(a, b, thr);
  case F::Identric: return a == b ? a : exp(log_identric_w(a, b, thr));
  case F::SeiffertP: return seiffert_p_w(a, b, thr);
  case F::SeiffertT: return seiffert_t_w(a, b, thr);
  case F::NeumanSandor: return detail::neuman_sandor(a, b, thr);
  case F::Lehmer: return detail::lehmer_mean(a, b, kind.order()->rounded(a.precision()));
  }
  throw std::logic_error("unknown mean family");
}

} // namespace

PositivePair::PositivePair(Real a, Real b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_finite() || !b_.is_finite() || !(a_ > 0L) || !(b_ > 0L)) {
    throw std::domain_error("mean arguments must be positive and finite");
  }
}

PositivePair PositivePair::of(double a, double b, const PrecisionContext& ctx) {
  return PositivePair(ctx.real(a), ctx.real(b));
}

PositivePair::Normalized PositivePair::normalize() const {
  const Real& hi = max(a_, b_);
  const Real& lo = min(a_, b_);
  return {hi, lo / hi};
}

std::string MeanKind::name(int digits) const {
  using F = Family;
  switch (family_) {
  case F::Power: return "A[" + order_->to_string(digits) + "]";
  case F::Geometric: return "G";
  case F::Arithmetic: return "A";
  case F::Quadratic: return "Q";
  case F::Logarithmic: return "L";
  case F::Identric: return "I";
  case F::SeiffertP: return "P";
  case F::SeiffertT: return "T";
  case F::NeumanSandor: return "N";
  case F::Lehmer: return "Lehmer[" + order_->to_string(digits) + "]";
  }
  return "?";
}

MeanKind MeanKind::parse(const std::string& token, const std::optional<Real>& order) {
  auto need_order = [&](const char* what) -> Real {
    if (!order) throw std::invalid_argument(std::string(what) + " mean requires an order");
    return *order;
  };
  if (token == "power") return power(need_order("power"));
  if (token == "lehmer") return lehmer(need_order("lehmer"));
  if (token == "ns" || token == "n" || token == "neuman-sandor") return neuman_sandor();
  if (token == "g" || token == "geometric") return geometric();
  if (token == "a" || token == "arithmetic") return arithmetic();
  if (token == "q" || token == "quadratic") return quadratic();
  if (token == "l" || token == "logarithmic") return logarithmic();
  if (token == "i" || token == "identric") return identric();
  if (token == "p" || token == "seiffert-p") return seiffert_p();
  if (token == "t" || token == "seiffert-t") return seiffert_t();
  throw std::invalid_argument("unknown mean '" + token + "'");
}

namespace detail {

Real odd_function_over_t_series(OddFunction fn, const Real& t) {
  return odd_series_tail(fn, t) + 1L;
}

Real log_power_mean(const Real& a, const Real& b, const Real& r) {
  if (a == b) return log(a);
  if (r.is_zero()) return (log(a) + log(b)) / 2L;
  const Real::Bits prec = std::max(a.precision(), b.precision());
  const Real& hi = max(a, b);
  const Real& lo = min(a, b);
  // Raise a ratio <= 1 to the power r so that the sum never overflows.
  const bool positive = r > 0L;
  const Real& base = positive ? hi : lo;
  const Real log_ratio = positive ? log(lo / hi) : log(hi / lo);
  if (abs(r) < Real::pow2(-static_cast<long>(prec / 2), prec)) {
    // (1/r) ln((1 + e^{rL})/2) = L/2 + r L^2/8 - r^3 L^4/192 + ...
    return log(base) + log_ratio / 2L + r * log_ratio * log_ratio / 8L;
  }
  return log(base) + log1p(expm1(r * log_ratio) / 2L) / r;
}

Real power_mean(const Real& a, const Real& b, const Real& r) {
  if (a == b) return a;
  if (r == 0L) return sqrt(a * b);
  if (r == 1L) return (a + b) / 2L;
  if (r == 2L) return sqrt((a * a + b * b) / 2L);
  if (r == -1L) return a * b * 2L / (a + b);
  return exp(log_power_mean(a, b, r));
}

Real neuman_sandor(const Real& a, const Real& b, const Real& series_threshold) {
  if (a == b) return a;
  return arithmetic(a, b) * t_over_phi(OddFunction::Asinh, diagonal_offset(a, b), series_threshold);
}

Real lehmer_mean(const Real& a, const Real& b, const Real& r) {
  if (a == b) return a;
  if (r.is_zero()) return (a + b) / 2L;
  const Real& hi = max(a, b);
  const Real& lo = min(a, b);
  // Keep rho^r <= 1 where it matters: the order -1/2 is the symmetry point.
  const bool upper = r >= -0.5;
  const Real& base = upper ? hi : lo;
  const Real rho = upper ? lo / hi : hi / lo;
  const Real u = pow(rho, r);
  return base * (u * rho + 1L) / (u + 1L);
}

} // namespace detail

Real power_mean(const PositivePair& pair, const Real& r, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return detail::power_mean(w.a, w.b, r.rounded(ctx.working_bits())).rounded(ctx.bits());
}

Real neuman_sandor(const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return detail::neuman_sandor(w.a, w.b, w.threshold).rounded(ctx.bits());
}

Real neuman_sandor_log_form(const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return neuman_sandor_log_w(w.a, w.b).rounded(ctx.bits());
}

Real seiffert_p(const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return seiffert_p_w(w.a, w.b, w.threshold).rounded(ctx.bits());
}

Real seiffert_p_arctan_form(const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return seiffert_p_arctan_w(w.a, w.b, w.threshold).rounded(ctx.bits());
}

Real seiffert_t(const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return seiffert_t_w(w.a, w.b, w.threshold).rounded(ctx.bits());
}

Real logarithmic_mean(const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return logarithmic_w(w.a, w.b, w.threshold).rounded(ctx.bits());
}

Real identric_mean(const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  if (w.a == w.b) return pair.a().rounded(ctx.bits());
  return exp(log_identric_w(w.a, w.b, w.threshold)).rounded(ctx.bits());
}

Real lehmer_mean(const PositivePair& pair, const Real& r, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return detail::lehmer_mean(w.a, w.b, r.rounded(ctx.working_bits())).rounded(ctx.bits());
}

Real mean_eval(const MeanKind& kind, const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  return eval_w(kind, w.a, w.b, w.threshold).rounded(ctx.bits());
}

Real log_mean_eval(const MeanKind& kind, const PositivePair& pair, const PrecisionContext& ctx) {
  const Lifted w = lift(pair, ctx);
  using F = MeanKind::Family;
  switch (kind.family()) {
  case F::Power:
    return detail::log_power_mean(w.a, w.b, kind.order()->rounded(w.a.precision())).rounded(ctx.bits());
  case F::Identric:
    return log_identric_w(w.a, w.b, w.threshold).rounded(ctx.bits());
  default:
    return log(eval_w(kind, w.a, w.b, w.threshold)).rounded(ctx.bits());
  }
}

std::optional<Real> mean_limit_at_zero(const MeanKind& kind, const PrecisionContext& ctx) {
  using F = MeanKind::Family;
  const Real::Bits w = ctx.working_bits();
  const Real zero(0L, ctx.bits());
  Real value(w);
  switch (kind.family()) {
  case F::Power: {
    const Real& r = *kind.order();
    if (!r.is_finite()) return std::nullopt;
    if (!(r > 0L)) return zero;
    value = exp(-Real::ln2(w) / r.rounded(w)); // 2^{-1/r}
    break;
  }
  case F::Geometric:
  case F::Logarithmic:
    return zero;
  case F::Arithmetic: return Real(0.5, ctx.bits());
  case F::Quadratic: value = sqrt(Real(0.5, w)); break;
  case F::Identric: value = exp(Real(-1L, w)); break;
  case F::SeiffertP: value = 1L / Real::pi(w); break;
  case F::SeiffertT: value = 2L / Real::pi(w); break;
  case F::NeumanSandor: value = 1L / (asinh(Real(1L, w)) * 2L); break;
  case F::Lehmer: {
    const Real& r = *kind.order();
    if (!r.is_finite()) return std::nullopt;
    if (r > 0L) return Real(1L, ctx.bits());
    if (r.is_zero()) return Real(0.5, ctx.bits());
    return zero;
  }
  }
  return value.rounded(ctx.bits());
}

} // namespace sharpmeans

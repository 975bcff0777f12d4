#ifndef SHARPMEANS_MEANS_HPP
#define SHARPMEANS_MEANS_HPP

#include "sharpmeans/context.hpp"
#include "sharpmeans/real.hpp"

#include <optional>
#include <string>

namespace sharpmeans {

/// Two positive arguments of a bivariate mean. Equal arguments are allowed.
class PositivePair {
public:
  /// Throws std::domain_error unless a > 0 and b > 0 (both finite).
  PositivePair(Real a, Real b);
  static PositivePair of(double a, double b, const PrecisionContext& ctx);

  const Real& a() const { return a_; }
  const Real& b() const { return b_; }

  struct Normalized {
    Real scale; ///< max(a, b)
    Real x;     ///< min(a, b) / max(a, b), in (0, 1]
  };
  Normalized normalize() const;

private:
  Real a_;
  Real b_;
};

/// Closed set of mean families; power and Lehmer means carry an order.
class MeanKind {
public:
  enum class Family {
    Power,
    Geometric,
    Arithmetic,
    Quadratic,
    Logarithmic,
    Identric,
    SeiffertP,
    SeiffertT,
    NeumanSandor,
    Lehmer,
  };

  static MeanKind power(Real order) { return MeanKind(Family::Power, std::move(order)); }
  static MeanKind lehmer(Real order) { return MeanKind(Family::Lehmer, std::move(order)); }
  static MeanKind geometric() { return MeanKind(Family::Geometric); }
  static MeanKind arithmetic() { return MeanKind(Family::Arithmetic); }
  static MeanKind quadratic() { return MeanKind(Family::Quadratic); }
  static MeanKind logarithmic() { return MeanKind(Family::Logarithmic); }
  static MeanKind identric() { return MeanKind(Family::Identric); }
  static MeanKind seiffert_p() { return MeanKind(Family::SeiffertP); }
  static MeanKind seiffert_t() { return MeanKind(Family::SeiffertT); }
  static MeanKind neuman_sandor() { return MeanKind(Family::NeumanSandor); }

  Family family() const { return family_; }
  /// Order of a power or Lehmer mean; empty for the other families.
  const std::optional<Real>& order() const { return order_; }

  /// Short label such as "N", "L" or "A[1.3333333]".
  std::string name(int digits = 8) const;

  /// Parses CLI tokens: ns, power, lehmer, geometric (g), arithmetic (a),
  /// quadratic (q), logarithmic (l), identric (i), seiffert-p (p),
  /// seiffert-t (t). Orders are required for power and lehmer.
  static MeanKind parse(const std::string& token, const std::optional<Real>& order);

private:
  explicit MeanKind(Family family, std::optional<Real> order = std::nullopt)
      : family_(family), order_(std::move(order)) {}

  Family family_;
  std::optional<Real> order_;
};

Real power_mean(const PositivePair& pair, const Real& r, const PrecisionContext& ctx);
Real neuman_sandor(const PositivePair& pair, const PrecisionContext& ctx);
/// The logarithmic closed form (a-b) / (2 ln((a-b+sqrt(2a^2+2b^2))/(a+b))).
Real neuman_sandor_log_form(const PositivePair& pair, const PrecisionContext& ctx);
Real seiffert_p(const PositivePair& pair, const PrecisionContext& ctx);
/// The arctangent closed form (a-b) / (4 arctan sqrt(a/b) - pi).
Real seiffert_p_arctan_form(const PositivePair& pair, const PrecisionContext& ctx);
Real seiffert_t(const PositivePair& pair, const PrecisionContext& ctx);
Real logarithmic_mean(const PositivePair& pair, const PrecisionContext& ctx);
Real identric_mean(const PositivePair& pair, const PrecisionContext& ctx);
Real lehmer_mean(const PositivePair& pair, const Real& r, const PrecisionContext& ctx);

Real mean_eval(const MeanKind& kind, const PositivePair& pair, const PrecisionContext& ctx);

/// ln M(a, b) computed at the guarded working precision and rounded to
/// ctx.bits(); absolute error stays at the 2^-bits level even when M is
/// close to 1.
Real log_mean_eval(const MeanKind& kind, const PositivePair& pair, const PrecisionContext& ctx);

/// lim_{x -> 0+} M(1, x) in closed form. Zero for means that vanish there.
/// Empty when the order is not finite.
std::optional<Real> mean_limit_at_zero(const MeanKind& kind, const PrecisionContext& ctx);

namespace detail {

/// The means below work at the precision of their arguments and return a
/// value at that precision; callers pass arguments widened to the working
/// precision they need.
Real power_mean(const Real& a, const Real& b, const Real& r);
Real log_power_mean(const Real& a, const Real& b, const Real& r);
Real neuman_sandor(const Real& a, const Real& b, const Real& series_threshold);
Real lehmer_mean(const Real& a, const Real& b, const Real& r);

/// phi(t)/t for phi in {asinh, asin, atan, atanh}, by its Maclaurin series.
enum class OddFunction { Asinh, Asin, Atan, Atanh };
Real odd_function_over_t_series(OddFunction fn, const Real& t);

} // namespace detail

} // namespace sharpmeans

#endif // SHARPMEANS_MEANS_HPP

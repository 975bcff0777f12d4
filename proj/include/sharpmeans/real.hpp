#ifndef SHARPMEANS_REAL_HPP
#define SHARPMEANS_REAL_HPP

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

namespace sharpmeans {

/// Owning handle to an MPFR number.
///
/// Every value carries its own mantissa precision. Arithmetic between two
/// values produces a result at the larger of the two precisions; operations
/// with a builtin scalar use the precision of the Real operand (the scalar is
/// taken exactly). There is no global or thread-local default precision, so
/// values may be created and combined freely from any thread.
class Real {
public:
  using Bits = mpfr_prec_t;

  static constexpr Bits kDefaultBits = 128;

  Real() : Real(kDefaultBits) {}
  explicit Real(Bits bits);
  Real(long value, Bits bits);
  Real(double value, Bits bits);

  /// Parses a decimal (or "inf"/"nan") literal, rounding to nearest.
  /// Throws std::invalid_argument on malformed input.
  static Real parse(std::string_view text, Bits bits);
  /// Exactly 2^exponent.
  static Real pow2(long exponent, Bits bits);
  static Real infinity(Bits bits, int sign = 1);
  static Real nan(Bits bits);
  static Real pi(Bits bits);
  static Real ln2(Bits bits);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Bits precision() const { return mpfr_get_prec(value_); }
  /// Copy rounded (or exactly widened) to the given precision.
  Real rounded(Bits bits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Shortest general-format rendering with the given significant digits.
  std::string to_string(int digits) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_nan() const { return mpfr_nan_p(value_) != 0; }
  bool is_inf() const { return mpfr_inf_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with |x| = m * 2^e, 1/2 <= m < 1. Undefined for zero.
  long exponent() const { return static_cast<long>(mpfr_get_exp(value_)); }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real operator-() const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

private:
  mpfr_t value_;
};

Real operator+(const Real& x, const Real& y);
Real operator-(const Real& x, const Real& y);
Real operator*(const Real& x, const Real& y);
Real operator/(const Real& x, const Real& y);

Real operator+(const Real& x, long y);
Real operator-(const Real& x, long y);
Real operator-(long x, const Real& y);
Real operator*(const Real& x, long y);
Real operator/(const Real& x, long y);
Real operator/(long x, const Real& y);
Real operator+(const Real& x, double y);
Real operator-(const Real& x, double y);
Real operator-(double x, const Real& y);
Real operator*(const Real& x, double y);
Real operator/(const Real& x, double y);
Real operator/(double x, const Real& y);

template <std::integral I>
Real operator+(const Real& x, I y) { return x + static_cast<long>(y); }
template <std::integral I>
Real operator+(I x, const Real& y) { return y + static_cast<long>(x); }
template <std::integral I>
Real operator-(const Real& x, I y) { return x - static_cast<long>(y); }
template <std::integral I>
Real operator-(I x, const Real& y) { return static_cast<long>(x) - y; }
template <std::integral I>
Real operator*(const Real& x, I y) { return x * static_cast<long>(y); }
template <std::integral I>
Real operator*(I x, const Real& y) { return y * static_cast<long>(x); }
template <std::integral I>
Real operator/(const Real& x, I y) { return x / static_cast<long>(y); }
template <std::integral I>
Real operator/(I x, const Real& y) { return static_cast<long>(x) / y; }
inline Real operator+(double x, const Real& y) { return y + x; }
inline Real operator*(double x, const Real& y) { return y * x; }

bool operator==(const Real& x, const Real& y);
std::partial_ordering operator<=>(const Real& x, const Real& y);
bool operator==(const Real& x, long y);
std::partial_ordering operator<=>(const Real& x, long y);
bool operator==(const Real& x, double y);
std::partial_ordering operator<=>(const Real& x, double y);

template <std::integral I>
bool operator==(const Real& x, I y) { return x == static_cast<long>(y); }
template <std::integral I>
std::partial_ordering operator<=>(const Real& x, I y) { return x <=> static_cast<long>(y); }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real pow(const Real& base, const Real& exponent);
Real pow(const Real& base, long exponent);
Real asinh(const Real& x);
Real asin(const Real& x);
Real atan(const Real& x);
Real atanh(const Real& x);

const Real& max(const Real& x, const Real& y);
const Real& min(const Real& x, const Real& y);

/// Unit in the last place of x at the given precision (x nonzero, finite).
Real ulp(const Real& x, Real::Bits bits);
/// |x - y| measured in ulps of the larger magnitude at the given precision.
double ulp_distance(const Real& x, const Real& y, Real::Bits bits);

} // namespace sharpmeans

#endif // SHARPMEANS_REAL_HPP

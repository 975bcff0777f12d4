#include "sharpmeans/real.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sharpmeans {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
using UnaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Real binary(const Real& x, const Real& y, BinaryOp op) {
  Real r(std::max(x.precision(), y.precision()));
  op(r.get(), x.get(), y.get(), kRound);
  return r;
}

Real unary(const Real& x, UnaryOp op) {
  Real r(x.precision());
  op(r.get(), x.get(), kRound);
  return r;
}

} // namespace

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

Real::Real(double value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_d(value_, value, kRound);
}

Real Real::parse(std::string_view text, Bits bits) {
  std::string s(text);
  Real r(bits);
  if (s.empty() || mpfr_set_str(r.value_, s.c_str(), 10, kRound) != 0) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::pow2(long exponent, Bits bits) {
  Real r(bits);
  mpfr_set_ui_2exp(r.value_, 1, exponent, kRound);
  return r;
}

Real Real::infinity(Bits bits, int sign) {
  Real r(bits);
  mpfr_set_inf(r.value_, sign);
  return r;
}

Real Real::nan(Bits bits) {
  Real r(bits);
  mpfr_set_nan(r.value_);
  return r;
}

Real Real::pi(Bits bits) {
  Real r(bits);
  mpfr_const_pi(r.value_, kRound);
  return r;
}

Real Real::ln2(Bits bits) {
  Real r(bits);
  mpfr_const_log2(r.value_, kRound);
  return r;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

// Steals the limb array; the moved-from object is left without storage and
// may only be destroyed or assigned to.
Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    if (value_[0]._mpfr_d == nullptr) {
      mpfr_init2(value_, other.precision());
    } else {
      mpfr_set_prec(value_, other.precision());
    }
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    if (value_[0]._mpfr_d != nullptr) {
      mpfr_clear(value_);
    }
    value_[0] = other.value_[0];
    other.value_[0]._mpfr_d = nullptr;
  }
  return *this;
}

Real::~Real() {
  if (value_[0]._mpfr_d != nullptr) {
    mpfr_clear(value_);
  }
}

Real Real::rounded(Bits bits) const {
  Real r(bits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

std::string Real::to_string(int digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", std::max(digits, 1), value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& x, const Real& y) { return binary(x, y, mpfr_add); }
Real operator-(const Real& x, const Real& y) { return binary(x, y, mpfr_sub); }
Real operator*(const Real& x, const Real& y) { return binary(x, y, mpfr_mul); }
Real operator/(const Real& x, const Real& y) { return binary(x, y, mpfr_div); }

Real operator+(const Real& x, long y) {
  Real r(x.precision());
  mpfr_add_si(r.get(), x.get(), y, kRound);
  return r;
}

Real operator-(const Real& x, long y) {
  Real r(x.precision());
  mpfr_sub_si(r.get(), x.get(), y, kRound);
  return r;
}

Real operator-(long x, const Real& y) {
  Real r(y.precision());
  mpfr_si_sub(r.get(), x, y.get(), kRound);
  return r;
}

Real operator*(const Real& x, long y) {
  Real r(x.precision());
  mpfr_mul_si(r.get(), x.get(), y, kRound);
  return r;
}

Real operator/(const Real& x, long y) {
  Real r(x.precision());
  mpfr_div_si(r.get(), x.get(), y, kRound);
  return r;
}

Real operator/(long x, const Real& y) {
  Real r(y.precision());
  mpfr_si_div(r.get(), x, y.get(), kRound);
  return r;
}

Real operator+(const Real& x, double y) {
  Real r(x.precision());
  mpfr_add_d(r.get(), x.get(), y, kRound);
  return r;
}

Real operator-(const Real& x, double y) {
  Real r(x.precision());
  mpfr_sub_d(r.get(), x.get(), y, kRound);
  return r;
}

Real operator-(double x, const Real& y) {
  Real r(y.precision());
  mpfr_d_sub(r.get(), x, y.get(), kRound);
  return r;
}

Real operator*(const Real& x, double y) {
  Real r(x.precision());
  mpfr_mul_d(r.get(), x.get(), y, kRound);
  return r;
}

Real operator/(const Real& x, double y) {
  Real r(x.precision());
  mpfr_div_d(r.get(), x.get(), y, kRound);
  return r;
}

Real operator/(double x, const Real& y) {
  Real r(y.precision());
  mpfr_d_div(r.get(), x, y.get(), kRound);
  return r;
}

bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.get(), y.get()) != 0; }

std::partial_ordering operator<=>(const Real& x, const Real& y) {
  if (x.is_nan() || y.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(x.get(), y.get());
  return c < 0 ? std::partial_ordering::less
       : c > 0 ? std::partial_ordering::greater
               : std::partial_ordering::equivalent;
}

bool operator==(const Real& x, long y) { return !x.is_nan() && mpfr_cmp_si(x.get(), y) == 0; }

std::partial_ordering operator<=>(const Real& x, long y) {
  if (x.is_nan()) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(x.get(), y);
  return c < 0 ? std::partial_ordering::less
       : c > 0 ? std::partial_ordering::greater
               : std::partial_ordering::equivalent;
}

bool operator==(const Real& x, double y) {
  return !x.is_nan() && !std::isnan(y) && mpfr_cmp_d(x.get(), y) == 0;
}

std::partial_ordering operator<=>(const Real& x, double y) {
  if (x.is_nan() || std::isnan(y)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_d(x.get(), y);
  return c < 0 ? std::partial_ordering::less
       : c > 0 ? std::partial_ordering::greater
               : std::partial_ordering::equivalent;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real asinh(const Real& x) { return unary(x, mpfr_asinh); }
Real asin(const Real& x) { return unary(x, mpfr_asin); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real atanh(const Real& x) { return unary(x, mpfr_atanh); }

Real pow(const Real& base, const Real& exponent) { return binary(base, exponent, mpfr_pow); }

Real pow(const Real& base, long exponent) {
  Real r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, kRound);
  return r;
}

const Real& max(const Real& x, const Real& y) { return x < y ? y : x; }
const Real& min(const Real& x, const Real& y) { return y < x ? y : x; }

Real ulp(const Real& x, Real::Bits bits) {
  return Real::pow2(x.exponent() - static_cast<long>(bits), 64);
}

double ulp_distance(const Real& x, const Real& y, Real::Bits bits) {
  if (x == y) return 0.0;
  const Real& big = abs(x) < abs(y) ? y : x;
  if (big.is_zero() || !big.is_finite()) return std::numeric_limits<double>::infinity();
  Real diff(std::max(x.precision(), y.precision()) + 64);
  mpfr_sub(diff.get(), x.get(), y.get(), kRound);
  return (abs(diff) / ulp(big, bits)).to_double();
}

} // namespace sharpmeans

#ifndef SHARPMEANS_ROOTS_HPP
#define SHARPMEANS_ROOTS_HPP

#include "sharpmeans/real.hpp"

#include <stdexcept>
#include <string>

namespace sharpmeans {

/// A value whose sign may be undetermined (sign == 0) at working precision.
struct SignedValue {
  Real value;
  int sign;
};

/// [lo, hi] with function values of strictly opposite sign at the ends.
struct RootBracket {
  Real lo;
  Real hi;
  Real f_lo;
  Real f_hi;

  Real width() const { return hi - lo; }
  Real midpoint() const { return (lo + hi) / 2L; }
};

/// Raised when a root search finds no sign change to bracket.
class NoSignChange : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shrinks `start` by bisection until its width is at most `tol` or
/// `max_iter` halvings are done. The end signs must be determined and
/// opposite. `fn` maps Real -> SignedValue.
///
/// If the midpoint sign is undetermined, the points mid -/+ tol/2 are tried;
/// when they straddle the root the tol-wide bracket between them is
/// returned, otherwise the current bracket is returned as is. Either way the
/// result still has determined, opposite end signs.
template <class Fn>
RootBracket bisect(const Fn& fn, RootBracket start, const Real& tol, int max_iter) {
  RootBracket b = std::move(start);
  const int s_lo = b.f_lo.sign();
  const int s_hi = b.f_hi.sign();
  if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) {
    throw NoSignChange("bisection needs opposite signs at the bracket ends");
  }
  for (int iter = 0; iter < max_iter && b.width() > tol; ++iter) {
    Real mid = b.midpoint();
    if (!(mid > b.lo) || !(mid < b.hi)) break; // out of mantissa bits
    SignedValue v = fn(mid);
    if (v.sign == s_lo) {
      b.lo = std::move(mid);
      b.f_lo = std::move(v.value);
    } else if (v.sign == s_hi) {
      b.hi = std::move(mid);
      b.f_hi = std::move(v.value);
    } else {
      const Real half = tol / 2L;
      Real left = mid - half;
      Real right = mid + half;
      if (left > b.lo && right < b.hi) {
        SignedValue vl = fn(left);
        SignedValue vr = fn(right);
        if (vl.sign == s_lo && vr.sign == s_hi) {
          return {std::move(left), std::move(right), std::move(vl.value), std::move(vr.value)};
        }
      }
      break;
    }
  }
  return b;
}

struct Extremum {
  Real x;
  Real value;
};

/// Golden-section search for the maximum of a unimodal fn on [lo, hi].
/// Stops when the interval is narrower than tol or after max_iter steps.
template <class Fn>
Extremum golden_section_maximize(const Fn& fn, const Real& lo, const Real& hi, const Real& tol,
                                 int max_iter) {
  const Real::Bits prec = lo.precision() > hi.precision() ? lo.precision() : hi.precision();
  const Real inv_phi = (sqrt(Real(5L, prec)) - 1L) / 2L;
  Real a = lo;
  Real b = hi;
  Real c = b - (b - a) * inv_phi;
  Real d = a + (b - a) * inv_phi;
  Real fc = fn(c);
  Real fd = fn(d);
  for (int iter = 0; iter < max_iter && (b - a) > tol; ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = fn(d);
    }
  }
  if (fc > fd) return {c, fc};
  return {d, fd};
}

template <class Fn>
Extremum golden_section_minimize(const Fn& fn, const Real& lo, const Real& hi, const Real& tol,
                                 int max_iter) {
  Extremum e = golden_section_maximize([&](const Real& x) { return -fn(x); }, lo, hi, tol, max_iter);
  return {std::move(e.x), -e.value};
}

} // namespace sharpmeans

#endif // SHARPMEANS_ROOTS_HPP

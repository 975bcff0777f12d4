#ifndef SHARPMEANS_TESTS_ORACLE_HPP
#define SHARPMEANS_TESTS_ORACLE_HPP

// Independent reference values for the tests.
//
// The functions below evaluate the textbook closed forms literally, at 512
// bits, with none of the library's series branches, log-space tricks or
// rewritten forms. The string constants were computed separately with
// mpmath at 300 bits and are frozen here.

#include "sharpmeans/real.hpp"

#include <string>

namespace oracle {

using sharpmeans::Real;

inline constexpr Real::Bits kBits = 512;

inline Real num(const std::string& text) { return Real::parse(text, kBits); }
inline Real num(double v) { return Real(v, kBits); }
inline Real num(long v) { return Real(v, kBits); }

inline Real power_mean(const Real& a0, const Real& b0, const Real& r0) {
  const Real a = a0.rounded(kBits), b = b0.rounded(kBits), r = r0.rounded(kBits);
  if (r.is_zero()) return sqrt(a * b);
  return pow((pow(a, r) + pow(b, r)) / 2L, 1L / r);
}

inline Real neuman_sandor(const Real& a0, const Real& b0) {
  const Real a = a0.rounded(kBits), b = b0.rounded(kBits);
  return (a - b) / (asinh((a - b) / (a + b)) * 2L);
}

inline Real seiffert_p(const Real& a0, const Real& b0) {
  const Real a = a0.rounded(kBits), b = b0.rounded(kBits);
  return (a - b) / (asin((a - b) / (a + b)) * 2L);
}

inline Real seiffert_t(const Real& a0, const Real& b0) {
  const Real a = a0.rounded(kBits), b = b0.rounded(kBits);
  return (a - b) / (atan((a - b) / (a + b)) * 2L);
}

inline Real logarithmic(const Real& a0, const Real& b0) {
  const Real a = a0.rounded(kBits), b = b0.rounded(kBits);
  return (a - b) / (log(a) - log(b));
}

// e^{-1} (a^a / b^b)^{1/(a-b)}
inline Real identric(const Real& a0, const Real& b0) {
  const Real a = a0.rounded(kBits), b = b0.rounded(kBits);
  return exp((a * log(a) - b * log(b)) / (a - b) - 1L);
}

inline Real lehmer(const Real& a0, const Real& b0, const Real& r0) {
  const Real a = a0.rounded(kBits), b = b0.rounded(kBits), r = r0.rounded(kBits);
  return (pow(a, r + 1L) + pow(b, r + 1L)) / (pow(a, r) + pow(b, r));
}

inline Real log_ratio(const Real& p, const Real& x) {
  const Real one = num(1L);
  return log(neuman_sandor(one, x)) - log(power_mean(one, x, p));
}

// ln((x - 1 + sqrt(2(x^2+1)))/(x+1)) - sqrt2 (x-1)/((x+1) sqrt(x^2+1)) (x^p+1)/(x^{p-1}+1)
inline Real slope_factor(const Real& p0, const Real& x0) {
  const Real p = p0.rounded(kBits), x = x0.rounded(kBits);
  const Real first = log((x - 1L + sqrt((x * x + 1L) * 2L)) / (x + 1L));
  const Real second = sqrt(num(2L)) * (x - 1L) / ((x + 1L) * sqrt(x * x + 1L)) *
                      (pow(x, p) + 1L) / (pow(x, p - 1L) + 1L);
  return first - second;
}

// g recovered from the derivative of the slope factor:
//   g = f'(x) (x^2+1)^{3/2} (x+1)^2 (x + x^p)^2 / (sqrt2 (1-x) x^p),
// with f' by a central difference at step 1e-40.
inline Real kernel_from_slope(const Real& p0, const Real& x0) {
  const Real p = p0.rounded(kBits), x = x0.rounded(kBits);
  const Real h = num("1e-40");
  const Real df = (slope_factor(p, x + h) - slope_factor(p, x - h)) / (h * 2L);
  const Real sq = x * x + 1L;
  const Real sum = x + pow(x, p);
  return df * sq * sqrt(sq) * (x + 1L) * (x + 1L) * sum * sum / (sqrt(num(2L)) * (1L - x) * pow(x, p));
}

// Frozen high-precision values.
inline const char* const kLowerExponent = "1.2227546306446905140109522432106806772554344425962793288449";
inline const char* const kInteriorMaximizer = "0.15806215485976343532973062320284605901060032457769959311421";
inline const char* const kLowerFactor = "1.0138035179634551384090334899422261122384008172733024370919";
inline const char* const kUpperFactor = "0.9540748981340520171761086893963340712134407991409127143521";
inline const char* const kPower43Half = "0.763993904662627549551419688739017138138500638962238586788709";
inline const char* const kNeumanSandorHalf = "0.763474989456743606578906718576615717650616604285038600229004";
inline const char* const kNeumanSandorTiny = "0.567296328587551750299199059949874101505554144235378337864566";
inline const char* const kNeumanSandorAtZero = "0.567296328553255492028622702576643118931495396376000337512665";
inline const char* const kSeiffertPQuarter = "0.582749578634313490340537478180895102914824214566797902317316";
inline const char* const kSeiffertTHalf = "0.776999438179084653787383304241193470553098952755730536423088";
inline const char* const kLogarithmicHalf = "0.721347520444481703679962340500946068713322977076492967067725";
inline const char* const kIdentricHalf = "0.735758882342884643191047540322921734891622262063535669015674";
inline const char* const kLehmerThirdHalf = "0.778753332987778948335917494667653348363126356133609161712282";
inline const char* const kLogRatio125Half = "0.0038648630497190709989227138533912629017956997356026022883759";
inline const char* const kSlope43Half = "0.000901085454597608322979432880319243225847909290056816365699631";
inline const char* const kSlopeAtZeroAbove1 = "0.532839975353552023569079399229905769541511547115312662423384";
inline const char* const kSlopeAtZeroAt1 = "-0.174266805832995500831764962874943269743324390573161374164956";
inline const char* const kSlopeAtZeroBelow1 = "-0.881373587019543025232609324979792309028160328261635410753296";
inline const char* const kLogRatioAtZero43 = "-0.0470131010410878675830095748360978827951913807958167745342923";
inline const char* const kSeiffertTFactor = "0.964935135545621594052880442033433956999431412083719536686595";
inline const char* const kSeiffertTLowerExponent = "1.53492853566137520205294804518286589679314362467314753785568";
inline const char* const kSeiffertPLowerExponent = "0.605511561398280157348800545239847298629980887688286324863916";
inline const char* const kLogarithmicE1 = "1.71828182845904523536028747135266249775724709369995957496697";

} // namespace oracle

#endif // SHARPMEANS_TESTS_ORACLE_HPP

#include "oracle.hpp"
#include "test_util.hpp"

#include "sharpmeans/means.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace sharpmeans;
using testutil::RelClose;
using testutil::UlpClose;

namespace {

const PrecisionContext kCtx(128);

PositivePair pair(double a, double b) { return PositivePair::of(a, b, kCtx); }
PositivePair pair(const Real& a, const Real& b) { return PositivePair(a, b); }

std::vector<MeanKind> all_kinds() {
  return {MeanKind::power(Real(-2.5, 128)), MeanKind::power(Real(4L, 128) / 3L), MeanKind::geometric(),
          MeanKind::arithmetic(),           MeanKind::quadratic(),               MeanKind::logarithmic(),
          MeanKind::identric(),             MeanKind::seiffert_p(),              MeanKind::seiffert_t(),
          MeanKind::neuman_sandor(),        MeanKind::lehmer(Real(1L, 128) / 3L),
          MeanKind::lehmer(Real(-1.5, 128))};
}

std::vector<PositivePair> random_pairs(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(-3.0, 3.0);
  std::vector<PositivePair> out;
  while (static_cast<int>(out.size()) < n) {
    const double a = std::pow(10.0, mag(rng));
    const double b = std::pow(10.0, mag(rng));
    if (a != b) out.push_back(pair(a, b));
  }
  return out;
}

} // namespace

TEST(PositivePairTest, RejectsNonPositiveAndNonFinite) {
  EXPECT_THROW(pair(-1.0, 1.0), std::domain_error);
  EXPECT_THROW(pair(1.0, 0.0), std::domain_error);
  EXPECT_THROW(PositivePair(Real::nan(128), Real(1L, 128)), std::domain_error);
  EXPECT_THROW(PositivePair(Real::infinity(128), Real(1L, 128)), std::domain_error);
}

TEST(PositivePairTest, NormalizeMapsToUnitInterval) {
  const auto n = pair(4.0, 1.0).normalize();
  EXPECT_EQ(n.scale, 4L);
  EXPECT_EQ(n.x, 0.25);
  const auto same = pair(3.0, 3.0).normalize();
  EXPECT_EQ(same.x, 1L);
}

TEST(MeanKindTest, ParsesCliTokens) {
  EXPECT_EQ(MeanKind::parse("ns", std::nullopt).family(), MeanKind::Family::NeumanSandor);
  EXPECT_EQ(MeanKind::parse("identric", std::nullopt).family(), MeanKind::Family::Identric);
  EXPECT_EQ(MeanKind::parse("t", std::nullopt).family(), MeanKind::Family::SeiffertT);
  const auto pw = MeanKind::parse("power", Real(2L, 128));
  EXPECT_EQ(pw.family(), MeanKind::Family::Power);
  EXPECT_EQ(*pw.order(), 2L);
  EXPECT_THROW(MeanKind::parse("power", std::nullopt), std::invalid_argument);
  EXPECT_THROW(MeanKind::parse("harmonic-ish", std::nullopt), std::invalid_argument);
}

TEST(MeansTest, EqualArgumentsReturnTheArgument) {
  EXPECT_EQ(power_mean(pair(5, 5), Real(7L, 128), kCtx), 5L);
  EXPECT_EQ(neuman_sandor(pair(3, 3), kCtx), 3L);
  EXPECT_EQ(seiffert_p(pair(2, 2), kCtx), 2L);
  EXPECT_EQ(seiffert_p_arctan_form(pair(2, 2), kCtx), 2L);
  EXPECT_EQ(seiffert_t(pair(7, 7), kCtx), 7L);
  EXPECT_EQ(identric_mean(pair(1, 1), kCtx), 1L);
  EXPECT_EQ(logarithmic_mean(pair(6, 6), kCtx), 6L);
  EXPECT_EQ(lehmer_mean(pair(4, 4), Real(3L, 128), kCtx), 4L);
  for (const auto& kind : all_kinds()) EXPECT_EQ(mean_eval(kind, pair(0.3, 0.3), kCtx), 0.3) << kind.name();
}

TEST(MeansTest, PowerMeanAtZeroIsGeometric) {
  for (double x : {1e-6, 0.1, 0.5, 0.99}) {
    EXPECT_TRUE(UlpClose(power_mean(pair(1, x), Real(0L, 128), kCtx), sqrt(kCtx.real(x)), 128, 1));
  }
}

TEST(MeansTest, FrozenReferenceValues) {
  const Real third = Real(1L, 128) / 3L;
  struct Case {
    Real got;
    const char* want;
  };
  const std::vector<Case> cases{
      {power_mean(pair(1, 0.5), Real(4L, 128) / 3L, kCtx), oracle::kPower43Half},
      {neuman_sandor(pair(1, 0.5), kCtx), oracle::kNeumanSandorHalf},
      {neuman_sandor(PositivePair(kCtx.real(1L), kCtx.parse("1e-10")), kCtx), oracle::kNeumanSandorTiny},
      {seiffert_p(pair(1, 0.25), kCtx), oracle::kSeiffertPQuarter},
      {seiffert_t(pair(1, 0.5), kCtx), oracle::kSeiffertTHalf},
      {logarithmic_mean(pair(1, 0.5), kCtx), oracle::kLogarithmicHalf},
      {identric_mean(pair(1, 0.5), kCtx), oracle::kIdentricHalf},
      {lehmer_mean(pair(1, 0.5), third, kCtx), oracle::kLehmerThirdHalf},
  };
  for (const auto& c : cases) EXPECT_TRUE(UlpClose(c.got, oracle::num(c.want), 128, 4));
}

TEST(MeansTest, AgreesWithLiteralFormulasAtHighPrecision) {
  const Real x = kCtx.real(0.5);
  const Real one = kCtx.real(1L);
  const Real r = Real(4L, 128) / 3L;
  EXPECT_TRUE(UlpClose(power_mean(pair(1, 0.5), r, kCtx), oracle::power_mean(one, x, r), 128, 4));
  EXPECT_TRUE(UlpClose(neuman_sandor(pair(1, 0.5), kCtx), oracle::neuman_sandor(one, x), 128, 4));
  EXPECT_TRUE(UlpClose(seiffert_p(pair(1, 0.25), kCtx), oracle::seiffert_p(one, kCtx.real(0.25)), 128, 4));
  EXPECT_TRUE(UlpClose(seiffert_t(pair(1, 0.5), kCtx), oracle::seiffert_t(one, x), 128, 4));
  EXPECT_TRUE(UlpClose(logarithmic_mean(pair(1, 0.5), kCtx), oracle::logarithmic(one, x), 128, 4));
  EXPECT_TRUE(UlpClose(identric_mean(pair(1, 0.5), kCtx), oracle::identric(one, x), 128, 4));
  EXPECT_TRUE(UlpClose(lehmer_mean(pair(1, 0.5), r, kCtx), oracle::lehmer(one, x, r), 128, 4));
}

TEST(MeansTest, LogarithmicMeanOfEAndOne) {
  const Real e = exp(Real(1L, 256));
  EXPECT_TRUE(UlpClose(logarithmic_mean(PositivePair(e, Real(1L, 256)), kCtx), oracle::num(oracle::kLogarithmicE1),
                       128, 4));
}

TEST(MeansTest, NeumanSandorApproachesItsLimitAtZero) {
  const Real at_zero = oracle::num(oracle::kNeumanSandorAtZero);
  EXPECT_TRUE(UlpClose(*mean_limit_at_zero(MeanKind::neuman_sandor(), kCtx), at_zero, 128, 1));
  // N(1, x) - N(1, 0+) is O(x): 1e-10 gives agreement to about 1e-10.
  EXPECT_TRUE(RelClose(neuman_sandor(PositivePair(kCtx.real(1L), kCtx.parse("1e-10")), kCtx), at_zero, 1e-9));
}

TEST(MeansTest, LehmerOfOrderZeroIsArithmetic) {
  for (double x : {1e-4, 0.3, 0.75}) {
    EXPECT_TRUE(UlpClose(lehmer_mean(pair(1, x), Real(0L, 128), kCtx), (kCtx.real(x) + 1L) / 2L, 128, 1));
  }
}

TEST(MeansTest, AliasesAreBitIdenticalToPowerMeans) {
  for (const auto& p : random_pairs(50, 7)) {
    EXPECT_EQ(mean_eval(MeanKind::arithmetic(), p, kCtx), mean_eval(MeanKind::power(Real(1L, 128)), p, kCtx));
    EXPECT_EQ(mean_eval(MeanKind::geometric(), p, kCtx), mean_eval(MeanKind::power(Real(0L, 128)), p, kCtx));
    EXPECT_EQ(mean_eval(MeanKind::quadratic(), p, kCtx), mean_eval(MeanKind::power(Real(2L, 128)), p, kCtx));
  }
  EXPECT_EQ(mean_eval(MeanKind::arithmetic(), pair(1, 3), kCtx), 2L);
  EXPECT_EQ(mean_eval(MeanKind::power(Real(1L, 128)), pair(1, 3), kCtx), 2L);
  EXPECT_EQ(mean_eval(MeanKind::neuman_sandor(), pair(1, 0.5), kCtx), neuman_sandor(pair(1, 0.5), kCtx));
}

TEST(MeansPropertyTest, Symmetry) {
  for (const auto& kind : all_kinds()) {
    for (const auto& p : random_pairs(200, 11)) {
      const PositivePair swapped(p.b(), p.a());
      EXPECT_TRUE(UlpClose(mean_eval(kind, p, kCtx), mean_eval(kind, swapped, kCtx), 128, 4)) << kind.name();
    }
  }
}

TEST(MeansPropertyTest, HomogeneousOfDegreeOne) {
  for (const auto& kind : all_kinds()) {
    for (const auto& p : random_pairs(40, 13)) {
      const Real base = mean_eval(kind, p, kCtx);
      for (const char* lambda_text : {"1e-6", "1", "1e6"}) {
        const Real lambda = kCtx.parse(lambda_text);
        // Scale at extra precision so the scaled arguments are exact.
        const PositivePair scaled(p.a().rounded(256) * lambda.rounded(256), p.b().rounded(256) * lambda.rounded(256));
        const Real want = base.rounded(256) * lambda.rounded(256);
        EXPECT_TRUE(UlpClose(mean_eval(kind, scaled, kCtx), want, 128, 4)) << kind.name() << " " << lambda_text;
      }
    }
  }
}

TEST(MeansPropertyTest, StrictlyBetweenTheArguments) {
  for (const auto& kind : all_kinds()) {
    for (const auto& p : random_pairs(100, 17)) {
      const Real m = mean_eval(kind, p, kCtx);
      EXPECT_GT(m, min(p.a(), p.b())) << kind.name();
      EXPECT_LT(m, max(p.a(), p.b())) << kind.name();
    }
  }
}

TEST(MeansPropertyTest, PowerAndLehmerMeansIncreaseWithOrder) {
  const std::vector<double> orders{-8, -2, -1, -0.5, -1e-3, 0, 1e-3, 1.0 / 3, 1, 1.2, 4.0 / 3, 2, 8};
  for (const auto& p : random_pairs(30, 19)) {
    for (std::size_t i = 0; i + 1 < orders.size(); ++i) {
      const Real r1 = kCtx.real(orders[i]);
      const Real r2 = kCtx.real(orders[i + 1]);
      EXPECT_LT(power_mean(p, r1, kCtx), power_mean(p, r2, kCtx));
      EXPECT_LT(lehmer_mean(p, r1, kCtx), lehmer_mean(p, r2, kCtx));
    }
  }
}

TEST(MeansPropertyTest, PublishedFormsOfNAndPAgree) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unit(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 100; ++i) {
    const auto p = pair(1, unit(rng));
    EXPECT_TRUE(UlpClose(seiffert_p(p, kCtx), seiffert_p_arctan_form(p, kCtx), 128, 4));
    EXPECT_TRUE(UlpClose(neuman_sandor(p, kCtx), neuman_sandor_log_form(p, kCtx), 128, 4));
  }
}

TEST(MeansPropertyTest, NeumanSandorIsCancellationSafeNearTheDiagonal) {
  const Real one(1L, 128);
  const Real tol = Real::pow2(-(128 - 8), 128);
  for (long k = 1; k <= 64; ++k) {
    const Real x = one - Real::pow2(-k, 128);
    const Real got = neuman_sandor(PositivePair(one, x), kCtx);
    EXPECT_TRUE(RelClose(got, oracle::neuman_sandor(one, x), tol)) << "delta = 2^-" << k;
  }
}

TEST(MeansPropertyTest, SeriesBranchIsContinuousAtItsThreshold) {
  // t = (1-x)/(1+x) crosses 2^-32 at x = (1 - 2^-32)/(1 + 2^-32).
  const Real one(1L, 128);
  const Real t0 = Real::pow2(-32, 128);
  for (const double factor : {0.999, 1.001}) {
    const Real t = t0 * factor;
    const Real x = (one - t) / (one + t);
    for (const auto& kind : {MeanKind::neuman_sandor(), MeanKind::seiffert_p(), MeanKind::seiffert_t(),
                             MeanKind::logarithmic(), MeanKind::identric()}) {
      const Real got = mean_eval(kind, PositivePair(one, x), kCtx);
      Real want(oracle::kBits);
      switch (kind.family()) {
      case MeanKind::Family::NeumanSandor: want = oracle::neuman_sandor(one, x); break;
      case MeanKind::Family::SeiffertP: want = oracle::seiffert_p(one, x); break;
      case MeanKind::Family::SeiffertT: want = oracle::seiffert_t(one, x); break;
      case MeanKind::Family::Logarithmic: want = oracle::logarithmic(one, x); break;
      default: want = oracle::identric(one, x); break;
      }
      EXPECT_TRUE(UlpClose(got, want, 128, 4)) << kind.name() << " factor " << factor;
    }
  }
}

TEST(MeansPropertyTest, OddSeriesMatchesTheFunctions) {
  using detail::OddFunction;
  const Real t = Real::pow2(-10, 200);
  const Real::Bits bits = 200;
  EXPECT_TRUE(UlpClose(detail::odd_function_over_t_series(OddFunction::Asinh, t), asinh(t.rounded(400)) / t, bits, 2));
  EXPECT_TRUE(UlpClose(detail::odd_function_over_t_series(OddFunction::Asin, t), asin(t.rounded(400)) / t, bits, 2));
  EXPECT_TRUE(UlpClose(detail::odd_function_over_t_series(OddFunction::Atan, t), atan(t.rounded(400)) / t, bits, 2));
  EXPECT_TRUE(UlpClose(detail::odd_function_over_t_series(OddFunction::Atanh, t), atanh(t.rounded(400)) / t, bits, 2));
}

TEST(MeansPropertyTest, PowerMeanIsContinuousThroughOrderZero) {
  const auto p = pair(1, 0.25);
  const Real g = power_mean(p, Real(0L, 128), kCtx);
  for (long e : {-70L, -60L, -40L}) {
    for (int s : {-1, 1}) {
      const Real r = Real::pow2(e, 128) * static_cast<long>(s);
      const Real got = power_mean(p, r, kCtx);
      EXPECT_TRUE(UlpClose(got, oracle::power_mean(kCtx.real(1L), kCtx.real(0.25), r), 128, 4)) << e;
      // A_r - G = O(r).
      EXPECT_TRUE(RelClose(got, g, Real::pow2(e + 2, 64)));
    }
  }
}

TEST(MeansPropertyTest, ExtremeOrdersDoNotOverflow) {
  const Real big = kCtx.real(1e6);
  const auto p = pair(1, 1e-300);
  EXPECT_TRUE(UlpClose(power_mean(p, big, kCtx), oracle::power_mean(p.a(), p.b(), big), 128, 4));
  EXPECT_TRUE(UlpClose(power_mean(p, -big, kCtx), oracle::power_mean(p.a(), p.b(), -big), 128, 4));
  EXPECT_TRUE(UlpClose(lehmer_mean(p, kCtx.real(50L), kCtx), oracle::lehmer(p.a(), p.b(), kCtx.real(50L)), 128, 4));
  EXPECT_TRUE(UlpClose(lehmer_mean(p, kCtx.real(-50L), kCtx), oracle::lehmer(p.a(), p.b(), kCtx.real(-50L)), 128, 4));
}

TEST(MeansTest, LogMeanEvalIsAccurateNearOne) {
  const Real one(1L, 128);
  const Real x = one - Real::pow2(-50, 128);
  for (const auto& kind : all_kinds()) {
    const Real got = log_mean_eval(kind, PositivePair(one, x), kCtx);
    Real m = mean_eval(kind, PositivePair(one, x), kCtx.widened(128));
    // ln M ~ -2^-51: an absolute error of 2^-128 is about 2^-77 relative.
    EXPECT_TRUE(RelClose(got, log(m), Real::pow2(-70, 64))) << kind.name();
  }
}

TEST(MeansTest, LimitsAtZero) {
  const Real::Bits w = 256;
  const Real pi = Real::pi(w);
  EXPECT_TRUE(UlpClose(*mean_limit_at_zero(MeanKind::seiffert_p(), kCtx), 1L / pi, 128, 1));
  EXPECT_TRUE(UlpClose(*mean_limit_at_zero(MeanKind::seiffert_t(), kCtx), 2L / pi, 128, 1));
  EXPECT_TRUE(UlpClose(*mean_limit_at_zero(MeanKind::identric(), kCtx), exp(Real(-1L, w)), 128, 1));
  EXPECT_TRUE(UlpClose(*mean_limit_at_zero(MeanKind::power(Real(3L, 128)), kCtx),
                       pow(Real(2L, w), Real(-1L, w) / 3L), 128, 1));
  EXPECT_TRUE(mean_limit_at_zero(MeanKind::geometric(), kCtx)->is_zero());
  EXPECT_TRUE(mean_limit_at_zero(MeanKind::logarithmic(), kCtx)->is_zero());
  EXPECT_TRUE(mean_limit_at_zero(MeanKind::power(Real(-1L, 128)), kCtx)->is_zero());
  EXPECT_FALSE(mean_limit_at_zero(MeanKind::power(Real::infinity(128)), kCtx).has_value());
  EXPECT_EQ(*mean_limit_at_zero(MeanKind::arithmetic(), kCtx), 0.5);
}

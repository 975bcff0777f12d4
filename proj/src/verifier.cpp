#include "sharpmeans/verifier.hpp"

#include "sharpmeans/sharp_constants.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sharpmeans {

namespace {

SignedValue classify(const AuxFunctionId& id, const Real& x, const PrecisionContext& ctx) {
  AuxValue v = evaluate_aux(id, x, ctx);
  const int s = v.sign(ctx);
  return {std::move(v.value), s};
}

void keep_smaller(std::optional<Real>& slot, const Real& v) {
  if (!slot || v < *slot) slot = v;
}

// (rhs - lhs) / |rhs|, computed from values carried at a wider precision.
Real relative_margin(const Real& lhs, const Real& rhs) { return (rhs - lhs) / abs(rhs); }

Witness unit_witness(const Real& x, std::string relation, const Real& lhs, const Real& rhs,
                     const PrecisionContext& ctx) {
  return {Real(1L, ctx.bits()), x.rounded(ctx.bits()), std::move(relation), lhs.rounded(ctx.bits()),
          rhs.rounded(ctx.bits())};
}

std::string power_label(const Real& p) { return MeanKind::power(p).name(); }

} // namespace

std::string to_string(Status status) {
  return status == Status::Holds ? "holds-on-grid" : "violated";
}

SignProfile sign_scan(const AuxFunctionId& id, const Real& lo, const Real& hi,
                      const PrecisionContext& ctx, Execution exec) {
  if (!(lo > 0L) || !(hi < 1L) || !(lo < hi)) {
    throw std::invalid_argument("scan interval must satisfy 0 < lo < hi < 1");
  }
  const std::vector<Real> xs = endpoint_weighted_grid(lo, hi, ctx.scan_points());
  std::vector<AuxValue> values = map_grid(
      std::span<const Real>(xs), [&](const Real& x) { return evaluate_aux(id, x, ctx); }, exec);

  SignProfile profile{id, {}, {}, {}};
  profile.samples.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const int s = values[i].sign(ctx);
    profile.samples.push_back({xs[i], std::move(values[i]), s});
  }

  const auto fn = [&](const Real& x) { return classify(id, x, ctx); };
  const Sample* prev = nullptr;
  Real segment_start = lo;
  for (const Sample& s : profile.samples) {
    if (s.sign == 0) continue;
    if (prev && s.sign != prev->sign) {
      RootBracket start{prev->x, s.x, prev->value.value, s.value.value};
      RootBracket b = bisect(fn, std::move(start), ctx.root_tol(), 2 * ctx.bits());
      Real cut = b.midpoint();
      profile.segments.push_back({segment_start, cut, prev->sign});
      segment_start = std::move(cut);
      profile.crossings.push_back(std::move(b));
    }
    prev = &s;
  }
  if (prev) profile.segments.push_back({segment_start, hi, prev->sign});
  return profile;
}

SignProfile sign_scan(const AuxFunctionId& id, const PrecisionContext& ctx, Execution exec) {
  const Interval span = default_scan_interval(ctx.bits());
  return sign_scan(id, span.lo, span.hi, ctx, exec);
}

ChainSpec power_refined_chain(const PrecisionContext& ctx) {
  const Real::Bits w = ctx.working_bits();
  const Real ln2 = Real::ln2(w);
  const Real pi = Real::pi(w);
  auto power = [&](const Real& p) { return MeanKind::power(p.rounded(ctx.bits())); };
  auto fraction = [&](long num, long den) { return MeanKind::power(Real(num, ctx.bits()) / den); };
  return {"power-refined",
          {MeanKind::geometric(), MeanKind::logarithmic(), fraction(1, 3), power(ln2 / log(pi)),
           MeanKind::seiffert_p(), fraction(2, 3), MeanKind::identric(), power(ln2),
           MeanKind::power(lower_power_exponent(ctx)), MeanKind::neuman_sandor(), fraction(4, 3),
           power(ln2 / log(pi / 2L)), MeanKind::seiffert_t(), fraction(5, 3)}};
}

ChainSpec classical_chain(const PrecisionContext& ctx) {
  auto fraction = [&](long num, long den) { return MeanKind::power(Real(num, ctx.bits()) / den); };
  return {"classical",
          {MeanKind::geometric(), MeanKind::logarithmic(), fraction(1, 2), MeanKind::seiffert_p(),
           MeanKind::arithmetic(), MeanKind::neuman_sandor(), fraction(3, 2), MeanKind::seiffert_t(),
           MeanKind::quadratic()}};
}

ChainSpec neuman_sandor_chain() {
  return {"neuman-sandor",
          {MeanKind::geometric(), MeanKind::logarithmic(), MeanKind::seiffert_p(),
           MeanKind::arithmetic(), MeanKind::neuman_sandor(), MeanKind::seiffert_t(),
           MeanKind::quadratic()}};
}

std::vector<PositivePair> unit_pairs(const Real& lo, const Real& hi, int n) {
  if (!(lo > 0L) || !(hi < 1L)) throw std::invalid_argument("pair ratios must lie in (0, 1)");
  std::vector<PositivePair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (Real& x : log_uniform_grid(lo, hi, n)) pairs.emplace_back(Real(1L, x.precision()), std::move(x));
  return pairs;
}

VerificationReport verify_chain(const ChainSpec& chain, const std::vector<PositivePair>& pairs,
                                const PrecisionContext& ctx, Execution exec) {
  if (chain.means.size() < 2) throw std::invalid_argument("a chain needs at least two means");
  for (const auto& pair : pairs) {
    if (pair.a() == pair.b()) throw std::invalid_argument("chain pairs must have a != b");
  }
  const auto rows = parallel_map(
      pairs.size(),
      [&](std::size_t i) {
        std::vector<Real> row;
        row.reserve(chain.means.size());
        for (const auto& kind : chain.means) row.push_back(mean_eval(kind, pairs[i], ctx));
        return row;
      },
      exec);

  VerificationReport report{"chain:" + chain.name, pairs.size(), ctx.bits(), Status::Holds, {}, {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool reported = false;
    for (std::size_t k = 0; k + 1 < chain.means.size(); ++k) {
      const Real& lhs = rows[i][k];
      const Real& rhs = rows[i][k + 1];
      keep_smaller(report.min_margin, relative_margin(lhs, rhs));
      if (!(lhs < rhs) && !reported) {
        report.status = Status::Violated;
        report.witnesses.push_back({pairs[i].a(), pairs[i].b(),
                                    chain.means[k].name() + " < " + chain.means[k + 1].name(), lhs, rhs});
        reported = true;
      }
    }
  }
  return report;
}

VerificationReport find_counterexample(const Real& p, Direction dir, const PrecisionContext& ctx,
                                       int points, Execution exec) {
  const Interval span = default_scan_interval(ctx.bits());
  const std::vector<Real> xs = endpoint_weighted_grid(span.lo, span.hi, points);
  const std::vector<AuxValue> fs = map_grid(
      std::span<const Real>(xs), [&](const Real& x) { return log_ratio(p, x, ctx); }, exec);

  // Upper claims F < 0 (N < A_p), lower claims F > 0 (A_p < N). Orient so
  // that a reversal shows up as a positive value.
  const int flip = dir == Direction::Upper ? 1 : -1;
  std::size_t worst = 0;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (fs[i].value * flip > fs[worst].value * flip) worst = i;
  }
  const bool upper = dir == Direction::Upper;
  VerificationReport report{std::string("counterexample:") + (upper ? "upper" : "lower"),
                            xs.size(), ctx.bits(), Status::Holds, {}, {}};

  const PrecisionContext wide = ctx.widened(PrecisionContext::kGuardBits);
  const PositivePair pair(Real(1L, wide.bits()), xs[worst].rounded(wide.bits()));
  const Real n = neuman_sandor(pair, wide);
  const Real a = power_mean(pair, p, wide);
  const Real& lhs = upper ? n : a;
  const Real& rhs = upper ? a : n;
  report.min_margin = relative_margin(lhs, rhs).rounded(ctx.bits());
  if (fs[worst].sign(ctx) == flip) {
    report.status = Status::Violated;
    const std::string rel = upper ? "N < " + power_label(p) : power_label(p) + " < N";
    report.witnesses.push_back(unit_witness(xs[worst], rel, lhs, rhs, ctx));
  }
  return report;
}

VerificationReport verify_lehmer_sandwich(const Real& p, const Real& q, const std::vector<Real>& xs,
                                          const PrecisionContext& ctx, Execution exec) {
  for (const Real& x : xs) {
    if (!(x > 0L) || !(x < 1L)) throw std::invalid_argument("sandwich grid must lie in (0, 1)");
  }
  const PrecisionContext wide = ctx.widened(PrecisionContext::kGuardBits);
  const MeanKind lower_lehmer = MeanKind::lehmer(p - 1L);
  const MeanKind upper_lehmer = MeanKind::lehmer(q - 1L);
  struct Row {
    Real lower;
    Real middle;
    Real upper;
  };
  const auto rows = map_grid(
      std::span<const Real>(xs),
      [&](const Real& x) {
        const PositivePair pair(Real(1L, wide.bits()), x.rounded(wide.bits()));
        const Real product = mean_eval(MeanKind::arithmetic(), pair, wide) *
                             mean_eval(MeanKind::quadratic(), pair, wide);
        return Row{product / mean_eval(lower_lehmer, pair, wide), neuman_sandor(pair, wide),
                   product / mean_eval(upper_lehmer, pair, wide)};
      },
      exec);

  VerificationReport report{"lehmer", xs.size(), ctx.bits(), Status::Holds, {}, {}};
  const Real floor = ctx.noise_floor();
  std::optional<std::size_t> worst_left;
  std::optional<std::size_t> worst_right;
  std::optional<Real> left_margin;
  std::optional<Real> right_margin;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Real ml = relative_margin(rows[i].lower, rows[i].middle);
    const Real mr = relative_margin(rows[i].middle, rows[i].upper);
    if (!left_margin || ml < *left_margin) {
      left_margin = ml;
      worst_left = i;
    }
    if (!right_margin || mr < *right_margin) {
      right_margin = mr;
      worst_right = i;
    }
  }
  if (rows.empty()) return report;
  report.min_margin = min(*left_margin, *right_margin).rounded(ctx.bits());
  const std::string lower_name = "A*Q/" + lower_lehmer.name();
  const std::string upper_name = "A*Q/" + upper_lehmer.name();
  if (!(*left_margin > floor)) {
    report.status = Status::Violated;
    const Row& r = rows[*worst_left];
    report.witnesses.push_back(unit_witness(xs[*worst_left], lower_name + " < N", r.lower, r.middle, ctx));
  }
  if (!(*right_margin > floor)) {
    report.status = Status::Violated;
    const Row& r = rows[*worst_right];
    report.witnesses.push_back(unit_witness(xs[*worst_right], "N < " + upper_name, r.middle, r.upper, ctx));
  }
  return report;
}

std::vector<Quadruple> random_quadruples(int n, std::uint64_t seed, const PrecisionContext& ctx) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ratio(1e-3, 1.0 - 1e-3);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  std::vector<Quadruple> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  while (static_cast<int>(out.size()) < n) {
    double x1 = ratio(rng);
    double x2 = ratio(rng);
    const double s1 = scale(rng);
    const double s2 = scale(rng);
    if (std::abs(x1 - x2) < 1e-9) continue;
    if (x1 > x2) std::swap(x1, x2);
    // Scales and ratios are doubles, so a_i = x_i * b_i is exact at >= 106 bits.
    const Real b1 = ctx.real(s1);
    const Real b2 = ctx.real(s2);
    out.push_back({ctx.real(x1) * b1, b1, ctx.real(x2) * b2, b2});
  }
  return out;
}

VerificationReport verify_fan_ky(const Real& p, const std::vector<Quadruple>& quadruples,
                                 const PrecisionContext& ctx, Execution exec) {
  const Real four_thirds = Real(4L, ctx.working_bits()) / 3L;
  const bool forward = p >= four_thirds;
  if (!forward && !(p <= 1L)) {
    throw std::invalid_argument("no ratio inequality is claimed for 1 < p < 4/3");
  }
  for (const auto& q : quadruples) {
    if (!(q.a1 / q.b1 < q.a2 / q.b2) || !(q.a2 / q.b2 < 1L)) {
      throw std::invalid_argument("quadruples need a1/b1 < a2/b2 < 1");
    }
  }
  const PrecisionContext wide = ctx.widened(PrecisionContext::kGuardBits);
  const MeanKind power = MeanKind::power(p);
  struct Row {
    Real n_ratio;
    Real a_ratio;
  };
  const auto rows = parallel_map(
      quadruples.size(),
      [&](std::size_t i) {
        const Quadruple& q = quadruples[i];
        const PositivePair first(q.a1.rounded(wide.bits()), q.b1.rounded(wide.bits()));
        const PositivePair second(q.a2.rounded(wide.bits()), q.b2.rounded(wide.bits()));
        return Row{neuman_sandor(first, wide) / neuman_sandor(second, wide),
                   mean_eval(power, first, wide) / mean_eval(power, second, wide)};
      },
      exec);

  VerificationReport report{forward ? "fanky:forward" : "fanky:reversed", quadruples.size(),
                            ctx.bits(), Status::Holds, {}, {}};
  const Real floor = ctx.noise_floor();
  std::optional<std::size_t> worst;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Real& lhs = forward ? rows[i].n_ratio : rows[i].a_ratio;
    const Real& rhs = forward ? rows[i].a_ratio : rows[i].n_ratio;
    const Real m = relative_margin(lhs, rhs);
    if (!report.min_margin || m < *report.min_margin) {
      report.min_margin = m;
      worst = i;
    }
  }
  if (!worst) return report;
  if (!(*report.min_margin > floor)) {
    report.status = Status::Violated;
    const Quadruple& q = quadruples[*worst];
    const Row& r = rows[*worst];
    const std::string rel = std::string(forward ? "N1/N2 < A1/A2" : "A1/A2 < N1/N2") +
                            " with (a2, b2) = (" + q.a2.to_string(17) + ", " + q.b2.to_string(17) + ")";
    report.witnesses.push_back({q.a1, q.b1, rel, (forward ? r.n_ratio : r.a_ratio).rounded(ctx.bits()),
                                (forward ? r.a_ratio : r.n_ratio).rounded(ctx.bits())});
  }
  report.min_margin = report.min_margin->rounded(ctx.bits());
  return report;
}

} // namespace sharpmeans

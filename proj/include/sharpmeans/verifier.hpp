#ifndef SHARPMEANS_VERIFIER_HPP
#define SHARPMEANS_VERIFIER_HPP

// Numerical checks of orderings between means: sign profiles of the
// auxiliary functions, inequality chains, counterexample search, and the
// Lehmer and Ky Fan type comparisons.

#include "sharpmeans/analysis.hpp"
#include "sharpmeans/context.hpp"
#include "sharpmeans/grid.hpp"
#include "sharpmeans/means.hpp"
#include "sharpmeans/roots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sharpmeans {

// --- sign profiles ---------------------------------------------------------

struct Sample {
  Real x;
  AuxValue value;
  int sign; ///< 0 when below the noise floor
};

/// A maximal run of one determined sign.
struct Segment {
  Real lo;
  Real hi;
  int sign; ///< +1 or -1, never 0
};

struct SignProfile {
  AuxFunctionId function;
  std::vector<Segment> segments;
  /// One bisected bracket per sign change, in ascending order.
  std::vector<RootBracket> crossings;
  std::vector<Sample> samples;
};

/// Samples the function on an endpoint-weighted grid of ctx.scan_points()
/// over [lo, hi] and bisects every sign change to ctx.root_tol().
/// Points whose sign is undetermined do not split segments.
SignProfile sign_scan(const AuxFunctionId& id, const Real& lo, const Real& hi,
                      const PrecisionContext& ctx, Execution exec = Execution::Parallel);
/// sign_scan over default_scan_interval().
SignProfile sign_scan(const AuxFunctionId& id, const PrecisionContext& ctx,
                      Execution exec = Execution::Parallel);

// --- reports -----------------------------------------------------------------

/// Holds means "holds at every grid point checked", never a proof.
enum class Status { Holds, Violated };
std::string to_string(Status status);

/// A point where a claimed strict inequality lhs < rhs failed.
struct Witness {
  Real a;
  Real b;
  std::string relation; ///< e.g. "L < A[0.33333333]"
  Real lhs;
  Real rhs;
};

struct VerificationReport {
  std::string claim;
  std::size_t grid = 0;
  int bits = 0;
  Status status = Status::Holds;
  std::vector<Witness> witnesses;
  /// Smallest (rhs - lhs) / rhs seen over all checked inequalities.
  std::optional<Real> min_margin;
};

// --- chains ------------------------------------------------------------------

/// means[0] < means[1] < ... claimed for all a != b.
struct ChainSpec {
  std::string name;
  std::vector<MeanKind> means;
};

/// G < L < A_{1/3} < A_{ln2/ln pi} < P < A_{2/3} < I < A_{ln 2} < A_{p0} < N
///   < A_{4/3} < A_{ln2/ln(pi/2)} < T < A_{5/3},
/// with p0 = lower_power_exponent(): every mean squeezed between its sharp
/// power-mean bounds.
ChainSpec power_refined_chain(const PrecisionContext& ctx);
/// G < L < A_{1/2} < P < A < N < A_{3/2} < T < Q.
ChainSpec classical_chain(const PrecisionContext& ctx);
/// G < L < P < A < N < T < Q.
ChainSpec neuman_sandor_chain();

/// Pairs (1, x) with x log-uniform on [lo, hi] inside (0, 1).
std::vector<PositivePair> unit_pairs(const Real& lo, const Real& hi, int n);

/// Checks strict ascending order of the rounded values at every pair and
/// records the first failing link per pair. Throws std::invalid_argument on
/// a pair with a == b or a chain with fewer than two means.
VerificationReport verify_chain(const ChainSpec& chain, const std::vector<PositivePair>& pairs,
                                const PrecisionContext& ctx, Execution exec = Execution::Parallel);

// --- counterexamples -----------------------------------------------------------

/// Which side of A_p < N < A_q is being tested: Upper searches for N > A_p
/// (p below the least valid upper exponent), Lower for N < A_p (p above
/// the greatest valid lower exponent).
enum class Direction { Upper, Lower };

/// Searches an endpoint-weighted grid of `points` over [1e-6, 1 - 1e-6] for
/// x with the claimed ordering between N(1, x) and A_p(1, x) reversed, with
/// the reversal above the noise floor. The report is Violated with the
/// strongest witness when one exists, Holds otherwise; min_margin is the
/// relative margin at the point closest to failing either way.
VerificationReport find_counterexample(const Real& p, Direction dir, const PrecisionContext& ctx,
                                       int points = 10000, Execution exec = Execution::Parallel);

// --- Lehmer sandwich ---------------------------------------------------------------

/// A A_2 / Lehmer_{p-1} < N < A A_2 / Lehmer_{q-1} at every (1, x). A side
/// fails where its relative margin is not above the noise floor; the worst
/// point of each failing side is reported.
VerificationReport verify_lehmer_sandwich(const Real& p, const Real& q, const std::vector<Real>& xs,
                                          const PrecisionContext& ctx,
                                          Execution exec = Execution::Parallel);

// --- Ky Fan type ratios -----------------------------------------------------------

/// Pairs (a1, b1), (a2, b2) with a1/b1 < a2/b2 < 1.
struct Quadruple {
  Real a1;
  Real b1;
  Real a2;
  Real b2;
};

/// n quadruples from a seeded std::mt19937_64; ratios are drawn uniformly
/// from [1e-3, 1 - 1e-3] and the scales from [1/2, 2].
std::vector<Quadruple> random_quadruples(int n, std::uint64_t seed, const PrecisionContext& ctx);

/// N(a1,b1)/N(a2,b2) < A_p(a1,b1)/A_p(a2,b2) for p >= 4/3, and the reverse
/// for p <= 1. Throws std::invalid_argument for 1 < p < 4/3, where no claim
/// is made, and for a quadruple whose ratios are not ordered as required.
VerificationReport verify_fan_ky(const Real& p, const std::vector<Quadruple>& quadruples,
                                 const PrecisionContext& ctx, Execution exec = Execution::Parallel);

} // namespace sharpmeans

#endif // SHARPMEANS_VERIFIER_HPP

#include "cli.hpp"

#include "sharpmeans/analysis.hpp"
#include "sharpmeans/report.hpp"
#include "sharpmeans/sharp_constants.hpp"
#include "sharpmeans/verifier.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <sstream>

namespace sharpmeans::cli {

namespace {

struct Options {
  int bits = PrecisionContext::kDefaultBits;
  std::string format = "text";
  std::optional<int> grid;
  std::optional<std::string> tol;
  std::uint64_t seed = 42;
  std::optional<int> digits;

  std::string mean;
  std::optional<std::string> order;
  std::string a;
  std::string b;
  std::string function;
  std::optional<std::string> p;
  std::optional<std::string> q;
  std::string dir = "upper";
  std::string claim;
  std::string chain = "power-refined";
};

class Command {
public:
  Command(const Options& opt, std::ostream& out) : opt_(opt), out_(out), ctx_(make_context(opt)) {
    digits_ = std::max(1, std::min(opt.digits.value_or(ctx_.printable_digits()), ctx_.printable_digits()));
  }

  int eval();
  int bounds();
  int scan();
  int verify();
  int constants();

private:
  static PrecisionContext make_context(const Options& opt) {
    PrecisionContext ctx(opt.bits);
    if (opt.tol) ctx = ctx.with_root_tol(Real::parse(*opt.tol, opt.bits));
    return ctx;
  }

  // Decimal, "num/den", or the literal p0.
  Real exponent(const std::string& text) const {
    if (text == "p0") return lower_power_exponent(ctx_);
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const Real den = ctx_.parse(text.substr(slash + 1));
      if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + text + "'");
      return ctx_.parse(text.substr(0, slash)) / den;
    }
    return ctx_.parse(text);
  }

  std::optional<Real> order() const {
    if (!opt_.order) return std::nullopt;
    return exponent(*opt_.order);
  }

  void emit(const Json& json, const std::string& text, const std::string& csv) {
    if (opt_.format == "json") {
      out_ << json.dump(2) << '\n';
    } else if (opt_.format == "csv") {
      out_ << csv;
    } else {
      out_ << text;
    }
  }

  int emit_report(const VerificationReport& r) {
    std::ostringstream csv;
    csv << "a,b,relation,lhs,rhs\n";
    for (const auto& w : r.witnesses) {
      csv << w.a.to_string(digits_) << ',' << w.b.to_string(digits_) << ",\"" << w.relation << "\","
          << w.lhs.to_string(digits_) << ',' << w.rhs.to_string(digits_) << '\n';
    }
    emit(to_json(r, digits_), to_text(r, digits_), csv.str());
    return r.status == Status::Holds ? kOk : kViolated;
  }

  int verify_lemma_signs();

  const Options& opt_;
  std::ostream& out_;
  PrecisionContext ctx_;
  int digits_;
};

int Command::eval() {
  const MeanKind kind = MeanKind::parse(opt_.mean, order());
  const PositivePair pair(ctx_.parse(opt_.a), ctx_.parse(opt_.b));
  const Real v = mean_eval(kind, pair, ctx_);
  const Json json{{"mean", kind.name()},
                  {"a", number_json(pair.a(), digits_)},
                  {"b", number_json(pair.b(), digits_)},
                  {"bits", ctx_.bits()},
                  {"value", number_json(v, digits_)}};
  const std::string text = kind.name() + "(" + opt_.a + ", " + opt_.b + ") = " + v.to_string(digits_) +
                           "   [" + std::to_string(digits_) + " digits, " + std::to_string(ctx_.bits()) +
                           " bits]\n";
  emit(json, text, "mean,a,b,value\n" + kind.name() + ',' + opt_.a + ',' + opt_.b + ',' + v.to_string(digits_) + '\n');
  return kOk;
}

int Command::bounds() {
  const MeanKind kind = MeanKind::parse(opt_.mean, order());
  PrecisionContext ctx = ctx_;
  if (opt_.grid) ctx = ctx.with_scan_points(*opt_.grid);
  const SharpBoundReport r = sharp_bound_report(kind, ctx);
  std::ostringstream csv;
  csv << "field,value\n"
      << "p_upper," << r.p_upper.to_string(digits_) << '\n'
      << "p_lower," << r.p_lower.to_string(digits_) << '\n'
      << "alpha_upper," << r.alpha_upper.to_string(digits_) << '\n'
      << "beta_lower," << r.beta_lower.to_string(digits_) << '\n';
  emit(to_json(r, ctx.bits(), digits_), to_text(r, digits_), csv.str());
  return kOk;
}

int Command::scan() {
  if (!opt_.p) throw std::invalid_argument("scan requires --p");
  const AuxFunctionId id{AuxFunctionId::parse_tag(opt_.function), exponent(*opt_.p)};
  PrecisionContext ctx = ctx_;
  if (opt_.grid) ctx = ctx.with_scan_points(*opt_.grid);
  const SignProfile profile = sign_scan(id, ctx);
  emit(to_json(profile, ctx.bits(), digits_), to_text(profile, digits_), to_csv(profile, digits_));
  return kOk;
}

int Command::verify() {
  const Interval span = default_scan_interval(ctx_.bits());
  if (opt_.claim == "chain") {
    ChainSpec chain = opt_.chain == "classical"       ? classical_chain(ctx_)
                      : opt_.chain == "neuman-sandor" ? neuman_sandor_chain()
                                                      : power_refined_chain(ctx_);
    return emit_report(verify_chain(chain, unit_pairs(span.lo, span.hi, opt_.grid.value_or(500)), ctx_));
  }
  if (opt_.claim == "lehmer") {
    const Real p = exponent(opt_.p.value_or("4/3"));
    const Real q = exponent(opt_.q.value_or("1"));
    const std::vector<Real> xs = endpoint_weighted_grid(span.lo, span.hi, opt_.grid.value_or(10000));
    return emit_report(verify_lehmer_sandwich(p, q, xs, ctx_));
  }
  if (opt_.claim == "fanky") {
    const Real p = exponent(opt_.p.value_or("4/3"));
    return emit_report(verify_fan_ky(p, random_quadruples(opt_.grid.value_or(200), opt_.seed, ctx_), ctx_));
  }
  if (opt_.claim == "counterexample") {
    if (!opt_.p) throw std::invalid_argument("counterexample requires --p");
    const Direction dir = opt_.dir == "lower" ? Direction::Lower : Direction::Upper;
    const VerificationReport r = find_counterexample(exponent(*opt_.p), dir, ctx_, opt_.grid.value_or(10000));
    emit_report(r);
    // Success here means a counterexample was found.
    return r.status == Status::Violated ? kOk : kViolated;
  }
  return verify_lemma_signs();
}

// Crossing counts of g'''' .. g and f at p (default p0): 0, 1, 1, 2, 1, 1.
int Command::verify_lemma_signs() {
  struct Expectation {
    AuxTag tag;
    std::size_t crossings;
  };
  static constexpr std::array<Expectation, 6> kExpected{{{AuxTag::Kernel4, 0},
                                                         {AuxTag::Kernel3, 1},
                                                         {AuxTag::Kernel2, 1},
                                                         {AuxTag::Kernel1, 2},
                                                         {AuxTag::Kernel, 1},
                                                         {AuxTag::SlopeFactor, 1}}};
  const Real p = exponent(opt_.p.value_or("p0"));
  PrecisionContext ctx = ctx_;
  if (opt_.grid) ctx = ctx.with_scan_points(*opt_.grid);

  VerificationReport report{"lemma-signs", static_cast<std::size_t>(ctx.scan_points()), ctx.bits(),
                            Status::Holds, {}, {}};
  Json profiles = Json::array();
  std::string text;
  for (const auto& e : kExpected) {
    const AuxFunctionId id{e.tag, p};
    const SignProfile profile = sign_scan(id, ctx);
    const std::size_t got = profile.crossings.size();
    profiles.push_back(Json{{"function", id.tag_name()}, {"expected", e.crossings}, {"observed", got}});
    text += id.tag_name() + ": " + std::to_string(got) + " crossing(s), expected " + std::to_string(e.crossings) + '\n';
    if (got != e.crossings) {
      report.status = Status::Violated;
      report.witnesses.push_back({Real(1L, ctx.bits()), p, "crossings of " + id.tag_name(),
                                  Real(static_cast<long>(e.crossings), ctx.bits()),
                                  Real(static_cast<long>(got), ctx.bits())});
    }
  }
  Json json = to_json(report, digits_);
  json["profiles"] = profiles;
  emit(json, to_text(report, digits_) + text, "function,expected,observed\n" + [&] {
    std::string rows;
    for (const auto& row : profiles) {
      rows += row["function"].get<std::string>() + ',' + std::to_string(row["expected"].get<std::size_t>()) +
              ',' + std::to_string(row["observed"].get<std::size_t>()) + '\n';
    }
    return rows;
  }());
  return report.status == Status::Holds ? kOk : kViolated;
}

int Command::constants() {
  const Real p0 = lower_power_exponent(ctx_);
  const Real alpha = upper_exponent_factor(ctx_);
  const Real beta = lower_exponent_factor(ctx_);
  const RootBracket x = interior_maximizer_bracket(ctx_);
  auto tagged = [&](const Real& v, const char* source) {
    Json j = number_json(v, digits_);
    j["source"] = source;
    return j;
  };
  const Json json{
      {"bits", ctx_.bits()},
      {"p0", tagged(p0, "closed form ln 2 / ln ln(3 + 2 sqrt 2)")},
      {"alpha1", tagged(alpha, "closed form 2^(3/4) / ln(3 + 2 sqrt 2)")},
      {"beta2", tagged(beta, "exp F(p0, x) at the midpoint of the x_tilde bracket")},
      {"x_tilde",
       Json{{"lo", number_json(x.lo, digits_)},
            {"hi", number_json(x.hi, digits_)},
            {"source", "bisection of f(p0, x) = 0 to root_tol " + ctx_.root_tol().to_string(6)}}}};
  std::ostringstream text;
  text << "p0       " << p0.to_string(digits_) << "   ln 2 / ln ln(3 + 2 sqrt 2)\n"
       << "alpha1   " << alpha.to_string(digits_) << "   2^(3/4) / ln(3 + 2 sqrt 2)\n"
       << "beta2    " << beta.to_string(digits_) << "   exp F(p0, x_tilde)\n"
       << "x_tilde  [" << x.lo.to_string(digits_) << ", " << x.hi.to_string(digits_) << "]   root of f(p0, x)\n";
  std::ostringstream csv;
  csv << "name,value\n"
      << "p0," << p0.to_string(digits_) << '\n'
      << "alpha1," << alpha.to_string(digits_) << '\n'
      << "beta2," << beta.to_string(digits_) << '\n'
      << "x_tilde_lo," << x.lo.to_string(digits_) << '\n'
      << "x_tilde_hi," << x.hi.to_string(digits_) << '\n';
  emit(json, text.str(), csv.str());
  return kOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"High-precision bivariate means, sharp power-mean bounds and their numerical checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--bits", opt.bits, "Working precision in bits (>= 53)")->check(CLI::Range(53, 1 << 20));
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--grid", opt.grid, "Grid size (scan points, chain pairs, quadruples)")->check(CLI::PositiveNumber);
  app.add_option("--tol", opt.tol, "Root bracket tolerance (decimal)");
  app.add_option("--seed", opt.seed, "Seed for randomized grids");
  app.add_option("--digits", opt.digits, "Significant digits to print (capped by precision)")->check(CLI::PositiveNumber);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a mean M(a, b)");
  eval->add_option("--mean", opt.mean, "ns, power, lehmer, g, a, q, l, i, p, t")->required();
  eval->add_option("--order", opt.order, "Order of a power or Lehmer mean (decimal, n/d or p0)");
  eval->add_option("a", opt.a)->required();
  eval->add_option("b", opt.b)->required();

  CLI::App* bounds = app.add_subcommand("bounds", "Sharp power-mean exponents and constant factors");
  bounds->add_option("mean", opt.mean)->required();
  bounds->add_option("--order", opt.order, "Order of a power or Lehmer mean");

  CLI::App* scan = app.add_subcommand("scan", "Sign profile of F, f, g, g1..g4 on (0, 1)");
  scan->add_option("function", opt.function)->required()->check(CLI::IsMember({"F", "f", "g", "g1", "g2", "g3", "g4"}));
  scan->add_option("--p", opt.p, "Exponent (decimal, n/d or p0)")->required();

  CLI::App* verify = app.add_subcommand("verify", "Grid verification of a claim");
  verify->add_option("claim", opt.claim)
      ->required()
      ->check(CLI::IsMember({"chain", "lehmer", "fanky", "counterexample", "lemma-signs"}));
  verify->add_option("--p", opt.p, "Exponent (decimal, n/d or p0)");
  verify->add_option("--q", opt.q, "Second exponent for the Lehmer sandwich");
  verify->add_option("--dir", opt.dir, "Counterexample direction")->check(CLI::IsMember({"upper", "lower"}));
  verify->add_option("--chain", opt.chain, "Chain to check")
      ->check(CLI::IsMember({"power-refined", "classical", "neuman-sandor"}));

  CLI::App* constants = app.add_subcommand("constants", "Print p0, alpha1, beta2 and the x_tilde bracket");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    Command cmd(opt, out);
    if (eval->parsed()) return cmd.eval();
    if (bounds->parsed()) return cmd.bounds();
    if (scan->parsed()) return cmd.scan();
    if (verify->parsed()) return cmd.verify();
    if (constants->parsed()) return cmd.constants();
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFinderFailure;
  }
}

} // namespace sharpmeans::cli

#include "oracle.hpp"
#include "test_util.hpp"

#include "cli.hpp"
#include "sharpmeans/report.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace sharpmeans;
using testutil::RelClose;

namespace {

const PrecisionContext kCtx(128);

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = cli::kOk) {
  args.insert(args.begin(), {"--format", "json"});
  const CliResult r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return Json::parse(r.out);
}

} // namespace

TEST(ReportJsonTest, NumbersCarryDigits) {
  const Json j = number_json(kCtx.parse("0.125"), 36);
  EXPECT_EQ(j["value"], "0.125");
  EXPECT_EQ(j["digits"], 36);
  EXPECT_EQ(number_from_json(j, 128), 0.125);
}

TEST(ReportJsonTest, VerificationReportRoundTrips) {
  VerificationReport r;
  r.claim = "chain:test";
  r.grid = 17;
  r.bits = 128;
  r.status = Status::Violated;
  r.witnesses.push_back({kCtx.real(1L), kCtx.parse("0.3"), "N < A[1.2]", kCtx.parse("0.61"), kCtx.parse("0.6")});
  r.min_margin = kCtx.parse("-0.01");
  const int digits = kCtx.printable_digits();
  const Json j = to_json(r, digits);
  for (const char* key : {"claim", "grid", "bits", "status", "witnesses"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["status"], "violated");

  const VerificationReport back = verification_report_from_json(Json::parse(j.dump()), 128);
  EXPECT_EQ(back.claim, r.claim);
  EXPECT_EQ(back.grid, r.grid);
  EXPECT_EQ(back.bits, r.bits);
  EXPECT_EQ(back.status, r.status);
  ASSERT_EQ(back.witnesses.size(), 1u);
  EXPECT_EQ(back.witnesses[0].relation, "N < A[1.2]");
  EXPECT_EQ(back.witnesses[0].b, kCtx.parse("0.3"));
  ASSERT_TRUE(back.min_margin.has_value());
  EXPECT_EQ(*back.min_margin, kCtx.parse("-0.01"));
  EXPECT_EQ(to_json(back, digits).dump(), j.dump());
}

TEST(ReportJsonTest, HoldsReportHasNoWitnesses) {
  VerificationReport r;
  r.claim = "x";
  const Json j = to_json(r, 10);
  EXPECT_EQ(j["status"], "holds-on-grid");
  EXPECT_TRUE(j["witnesses"].empty());
  EXPECT_EQ(verification_report_from_json(j, 128).status, Status::Holds);
}

TEST(ReportTextTest, AlignedColumns) {
  VerificationReport r;
  r.claim = "chain:classical";
  r.grid = 500;
  r.bits = 128;
  r.min_margin = kCtx.parse("0.5");
  const std::string text = to_text(r, 10);
  // every value starts in the same column
  std::istringstream lines(text);
  std::string line;
  std::size_t column = std::string::npos;
  int rows = 0;
  while (std::getline(lines, line)) {
    const std::size_t gap = line.find("  ");
    ASSERT_NE(gap, std::string::npos) << line;
    const std::size_t start = line.find_first_not_of(' ', gap);
    if (column == std::string::npos) column = start;
    EXPECT_EQ(start, column) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 5);
  EXPECT_EQ(text.rfind("claim", 0), 0u);
  EXPECT_NE(text.find("holds-on-grid\n"), std::string::npos);
}

TEST(CliTest, EvalNeumanSandor) {
  const Json j = run_json({"eval", "--mean", "ns", "1", "0.5"});
  EXPECT_EQ(j["bits"], 128);
  EXPECT_EQ(j["value"]["digits"], kCtx.printable_digits());
  const Real v = number_from_json(j["value"], 128);
  EXPECT_TRUE(RelClose(v, oracle::num(oracle::kNeumanSandorHalf), 1e-35));
}

TEST(CliTest, EvalPowerMeans) {
  EXPECT_EQ(number_from_json(run_json({"eval", "--mean", "power", "--order", "0", "1", "4"})["value"], 128), 2L);
  EXPECT_EQ(number_from_json(run_json({"eval", "--mean", "power", "--order", "1", "1", "3"})["value"], 128), 2L);
  const Real v = number_from_json(run_json({"eval", "--mean", "power", "--order", "4/3", "1", "0.5"})["value"], 128);
  EXPECT_TRUE(RelClose(v, oracle::num(oracle::kPower43Half), 1e-35));
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"eval", "--mean", "bogus", "1", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--mean", "ns", "-1", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--mean", "ns", "1", "abc"}).code, cli::kUsageError);
  EXPECT_EQ(run({"eval", "--mean", "power", "1", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--bits", "8", "constants"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--format", "xml", "constants"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "nonsense"}).code, cli::kUsageError);
  EXPECT_EQ(run({"scan", "g"}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"verify", "fanky", "--p", "1.2"}).code, cli::kUsageError);
}

TEST(CliTest, ConstantsCarrySources) {
  const Json j = run_json({"constants"});
  for (const char* key : {"p0", "alpha1", "beta2", "x_tilde"}) {
    ASSERT_TRUE(j.contains(key)) << key;
    EXPECT_TRUE(j[key].contains("source")) << key;
  }
  EXPECT_TRUE(RelClose(number_from_json(j["p0"], 128), oracle::num(oracle::kLowerExponent), 1e-35));
}

TEST(CliTest, BoundsArithmeticIsDegenerate) {
  const Json j = run_json({"bounds", "arithmetic"});
  EXPECT_TRUE(RelClose(number_from_json(j["p_upper"], 128), kCtx.real(1L), 1e-6));
  EXPECT_TRUE(RelClose(number_from_json(j["p_lower"], 128), kCtx.real(1L), 1e-6));
  EXPECT_TRUE(RelClose(number_from_json(j["alpha_upper"], 128), kCtx.real(1L), 1e-6));
  EXPECT_TRUE(RelClose(number_from_json(j["beta_lower"], 128), kCtx.real(1L), 1e-6));
}

TEST(CliTest, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "chain"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "chain", "--chain", "classical"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "lehmer", "--p", "4/3", "--q", "1"}).code, cli::kOk);
  EXPECT_EQ(run({"verify", "lehmer", "--p", "1.3", "--q", "1"}).code, cli::kViolated);
  EXPECT_EQ(run({"verify", "fanky", "--p", "4/3"}).code, cli::kOk);
}

TEST(CliTest, CounterexampleExitCodes) {
  // exit 0 means a witness was found, 1 that none was
  const Json found = run_json({"verify", "counterexample", "--p", "1.32", "--dir", "upper"}, cli::kOk);
  EXPECT_EQ(found["status"], "violated");
  EXPECT_FALSE(found["witnesses"].empty());
  const Json none = run_json({"verify", "counterexample", "--p", "4/3", "--dir", "upper"}, cli::kViolated);
  EXPECT_EQ(none["status"], "holds-on-grid");
}

TEST(CliTest, ScanAcceptsLowerExponentToken) {
  const Json j = run_json({"--grid", "500", "scan", "g", "--p", "p0"});
  EXPECT_EQ(j["crossings"].size(), 1u);
  EXPECT_TRUE(RelClose(number_from_json(j["p"], 128), oracle::num(oracle::kLowerExponent), 1e-35));
  const CliResult csv = run({"--format", "csv", "--grid", "20", "scan", "f", "--p", "p0"});
  EXPECT_EQ(csv.code, cli::kOk);
  EXPECT_EQ(csv.out.rfind("x,value,scale,sign\n", 0), 0u);
}

TEST(CliTest, OutputIsByteIdentical) {
  const std::vector<std::string> args = {"--format", "json", "--seed", "7", "verify", "fanky", "--p", "2"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  EXPECT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  const CliResult c = run({"--format", "json", "--seed", "8", "verify", "fanky", "--p", "2"});
  EXPECT_EQ(c.code, cli::kOk);
}

TEST(CliTest, BitsAndDigitsFlags) {
  const Json j = run_json({"--bits", "256", "eval", "--mean", "ns", "1", "0.5"});
  EXPECT_EQ(j["bits"], 256);
  EXPECT_EQ(j["value"]["digits"], 75);
  const Json d = run_json({"--digits", "10", "eval", "--mean", "ns", "1", "0.5"});
  EXPECT_EQ(d["value"]["value"], "0.7634749895");
}

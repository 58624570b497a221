#include <sstream>

#include <gtest/gtest.h>

#include "lefcorr/complex_torus.hpp"
#include "lefcorr/errors.hpp"
#include "lefcorr/report.hpp"
#include "lefcorr/rng.hpp"
#include "lefcorr/sweep.hpp"
#include "lefcorr/torus_smooth.hpp"

using namespace lefcorr;

namespace {

std::string sweep_lines(const SweepConfig& config) {
  std::ostringstream out;
  run_sweep(config, &out);
  return out.str();
}

}  // namespace

TEST(Report, TorusJson) {
  const auto report = torus::verify_theorem(torus::TorusCorrespondence::parse("2", "1", "0"));
  const std::string json = report_to_json(report);
  EXPECT_EQ(json.rfind(R"({"model":"torus","global":"-1","local":"-1","match":true,)", 0), 0U) << json;
  EXPECT_NE(json.find(R"("fixed_point_count":1)"), std::string::npos);
  EXPECT_NE(json.find(R"("parameters":{"A":"2","B":"1","c":"0"})"), std::string::npos);
  EXPECT_EQ(json.find("seed"), std::string::npos);
}

TEST(Report, GaussianJson) {
  const auto report = ctorus::verify_conjecture1(ctorus::ComplexTorusCorrespondence(
      ctorus::LatticeSpec::gaussian(), ExactScalar::gaussian(1, 1), ExactScalar(1L)));
  EXPECT_NE(report_to_json(report).find(R"("global":"0+1*i")"), std::string::npos);
}

TEST(Report, CsvColumns) {
  EXPECT_EQ(report_csv_header(), "model,parameters,global,local,fixed_point_count,match,skipped_degenerate,seed,trial,tolerance");
  VerificationReport report;
  report.model = "cp1";
  report.parameters = {{"g", "2,1;0,3"}, {"d", "2"}};
  report.global = "19";
  report.local = "19";
  report.fixed_point_count = 2;
  report.match = true;
  report.seed = 42;
  report.trial = 3;
  EXPECT_EQ(report_to_csv(report), R"(cp1,"g=2,1;0,3 d=2",19,19,2,true,0,42,3,)");
}

TEST(Report, FormatsAndText) {
  EXPECT_EQ(parse_report_format("json"), ReportFormat::kJson);
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::kCsv);
  EXPECT_EQ(parse_report_format("text"), ReportFormat::kText);
  EXPECT_THROW(parse_report_format("xml"), ConfigError);
  const auto report = torus::verify_theorem(torus::TorusCorrespondence::parse("2", "1", "0"));
  const std::string text = report_to_text(report);
  EXPECT_NE(text.find("match:"), std::string::npos);
  EXPECT_NE(emit_report(report, ReportFormat::kCsv).find("model,parameters"), std::string::npos);
}

TEST(Rng, SubstreamsAreDeterministicAndDistinct) {
  auto a = TrialRng::substream(42, 7);
  auto b = TrialRng::substream(42, 7);
  auto c = TrialRng::substream(42, 8);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
  }
}

TEST(Rng, BoundedDraws) {
  auto rng = TrialRng::substream(1, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform_int(-3, 5);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 5);
    const Rational f = rng.unit_fraction(12);
    EXPECT_GE(f, 0);
    EXPECT_LT(f, 1);
    EXPECT_LE(f.get_den(), 12);
    const double r = rng.uniform_real();
    EXPECT_GE(r, 0.0);
    EXPECT_LT(r, 1.0);
  }
}

TEST(SweepConfig, Validation) {
  SweepConfig config;
  EXPECT_NO_THROW(validate(config));
  config.trials = 0;
  EXPECT_THROW(validate(config), ConfigError);
  config = SweepConfig{};
  config.dim_max = 5;
  EXPECT_THROW(validate(config), ConfigError);
  config = SweepConfig{};
  config.floating = true;
  EXPECT_THROW(validate(config), ConfigError);
  EXPECT_THROW(parse_sweep_model("sphere"), ConfigError);
  EXPECT_EQ(sweep_model_name(parse_sweep_model("ctorus")), "ctorus");
}

TEST(Sweep, ReproducibleAcrossThreadCounts) {
  for (SweepModel model : {SweepModel::kTorus, SweepModel::kComplexTorus, SweepModel::kCp1}) {
    SweepConfig config;
    config.model = model;
    config.trials = 150;
    config.threads = 1;
    const std::string serial = sweep_lines(config);
    config.threads = 4;
    EXPECT_EQ(sweep_lines(config), serial);
    config.seed = 43;
    EXPECT_NE(sweep_lines(config), serial);
  }
}

TEST(Sweep, SummaryCountsLines) {
  SweepConfig config;
  config.trials = 300;
  std::ostringstream out;
  const auto summary = run_sweep(config, &out);
  EXPECT_EQ(summary.trials, 300U);
  EXPECT_EQ(summary.matches + summary.skipped + summary.mismatches, 300U);
  EXPECT_EQ(summary.mismatches, 0U);
  std::size_t lines = 0;
  for (char ch : out.str()) lines += ch == '\n';
  EXPECT_EQ(lines, 300U);
}

TEST(Sweep, SkippedDrawsAreReported) {
  SweepConfig config;
  config.trials = 400;
  bool saw_skip = false;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const auto report = run_trial(config, t);
    EXPECT_EQ(report.trial, t);
    if (report.skipped_degenerate != 0) {
      saw_skip = true;
      EXPECT_TRUE(report.skipped_reason.has_value());
    }
  }
  EXPECT_TRUE(saw_skip);
}

TEST(Sweep, ExhaustiveTrialCount) {
  SweepConfig config;
  config.model = SweepModel::kComplexTorus;
  config.exhaustive = true;
  config.norm_bound = 2;
  config.trials = 3;
  // Z[i] elements with 0 < N <= 2: 8 of them, 56 ordered pairs with a != b.
  EXPECT_EQ(trial_count(config), 56U * 3U);
  const auto summary = run_sweep(config, nullptr);
  EXPECT_EQ(summary.matches, 56U * 3U);
}

TEST(Sweep, IntegralAudit) {
  SweepConfig config;
  config.dim_max = 3;
  config.trials = 200;
  const auto summary = run_integral_audit(config, nullptr);
  EXPECT_EQ(summary.equalities, 200U);
  EXPECT_EQ(summary.mismatches, 0U);
}

TEST(Sweep, FloatingCp1) {
  SweepConfig config;
  config.model = SweepModel::kCp1;
  config.floating = true;
  config.trials = 100;
  const auto summary = run_sweep(config, nullptr);
  EXPECT_EQ(summary.matches, 100U);
}

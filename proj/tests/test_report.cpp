#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "bcx/report.hpp"
#include "bcx/verification.hpp"

using bcx::CheckRecord;
using bcx::Family;
using bcx::ModelSpec;
using bcx::Report;
using bcx::RunConfig;
using bcx::RunMode;
using bcx::SolutionType;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.algebra_samples = 300;
  cfg.matrix_samples = 100;
  cfg.energy_probe_points = 10;
  cfg.grid.points = 5;
  cfg.models = {ModelSpec{Family::Harmonic, 2.0, 0.0, SolutionType::I}};
  return cfg;
}

}  // namespace

TEST(Report, EmptyReportSerialization) {
  Report rep;
  const auto j = nlohmann::json::parse(bcx::emit_report_json(rep));
  EXPECT_EQ(j.at("summary"), "pass");
  EXPECT_TRUE(j.at("checks").empty());
  EXPECT_EQ(j.at("schema_version"), "1");
}

TEST(Report, SingleFailingCheckFlipsSummary) {
  Report rep;
  CheckRecord r;
  r.name = "x";
  r.pass = false;
  rep.checks.push_back(r);
  const auto j = nlohmann::json::parse(bcx::emit_report_json(rep));
  EXPECT_EQ(j.at("summary"), "fail");
  EXPECT_FALSE(rep.pass());
}

TEST(Report, RoundTrip) {
  RunConfig cfg = small_config();
  cfg.include_timings = true;
  const Report rep = bcx::run_suite(cfg);
  const Report back = bcx::parse_report(bcx::emit_report_json(rep));
  ASSERT_EQ(back.checks.size(), rep.checks.size());
  for (std::size_t i = 0; i < rep.checks.size(); ++i) EXPECT_EQ(back.checks[i], rep.checks[i]);
  EXPECT_EQ(back.config.models.size(), rep.config.models.size());
  EXPECT_EQ(back.config.seed, rep.config.seed);
  EXPECT_EQ(back.config.grid.points, rep.config.grid.points);
  // emitting the parsed report reproduces the bytes
  EXPECT_EQ(bcx::emit_report_json(back), bcx::emit_report_json(rep));
}

TEST(Report, DeterministicBytesForIdenticalConfig) {
  const RunConfig cfg = small_config();
  const std::string a = bcx::emit_report_json(bcx::run_suite(cfg));
  const std::string b = bcx::emit_report_json(bcx::run_suite(cfg));
  EXPECT_EQ(a, b);
}

TEST(Report, WorkerCountDoesNotChangeBytes) {
  RunConfig cfg = small_config();
  const std::string a = bcx::emit_report_json(bcx::run_suite(cfg));
  cfg.workers = 4;
  RunConfig cfg2 = cfg;
  cfg2.workers = 1;
  // workers is echoed in the config, so compare check sections only
  const auto checks_of = [](const std::string& s) {
    return s.substr(s.find("\"checks\""));
  };
  EXPECT_EQ(checks_of(bcx::emit_report_json(bcx::run_suite(cfg))),
            checks_of(bcx::emit_report_json(bcx::run_suite(cfg2))));
}

TEST(RunSuite, DefaultHarmonicPassesAllChecks) {
  const Report rep = bcx::run_suite(small_config());
  EXPECT_TRUE(rep.pass());
  bool saw_classification = false;
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(c.pass) << c.name << " residual " << c.max_residual << " " << c.detail;
    if (c.name == "symmetry/classification_pti" || c.name == "symmetry/classification_ptii") {
      saw_classification = true;
      EXPECT_EQ(c.detail.rfind("unbroken", 0), 0u) << c.detail;
    }
  }
  EXPECT_TRUE(saw_classification);
}

TEST(RunSuite, InvertedEnergyChecksPass) {
  RunConfig cfg = small_config();
  cfg.models = {ModelSpec{Family::Inverted, 0.0, 2.0, SolutionType::I},
                ModelSpec{Family::Inverted, 0.0, 2.0, SolutionType::II}};
  const Report rep = bcx::run_suite(cfg);
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(c.pass) << c.name << " " << c.params << " residual " << c.max_residual;
    // the type II state is broken under both operators
    if (c.name.rfind("symmetry/classification", 0) == 0 &&
        c.params.find("type=II") != std::string::npos)
      EXPECT_EQ(c.detail, "broken");
  }
}

TEST(RunSuite, IsotonicFullSuitePasses) {
  RunConfig cfg = small_config();
  cfg.models = {ModelSpec{Family::Isotonic, 2.0, 6.0, SolutionType::I},
                ModelSpec{Family::Isotonic, 2.0, 6.0, SolutionType::II}};
  const Report rep = bcx::run_suite(cfg);
  for (const auto& c : rep.checks)
    EXPECT_TRUE(c.pass) << c.name << " " << c.params << " residual " << c.max_residual << " "
                        << c.detail;
  for (const auto& c : rep.checks) {
    if (c.name != "symmetry/classification_pti") continue;
    if (c.params.find("type=I;") != std::string::npos)
      EXPECT_EQ(c.detail.rfind("unbroken", 0), 0u);
    else
      EXPECT_EQ(c.detail, "broken");
  }
}

TEST(RunSuite, AbsurdFdStepFailsAgreementChecks) {
  RunConfig cfg = small_config();
  cfg.fd_step = 10.0;
  const Report rep = bcx::run_suite(cfg);
  bool agreement_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "model/energy_cross_agreement" && !c.pass) agreement_failed = true;
  EXPECT_TRUE(agreement_failed);
  EXPECT_FALSE(rep.pass());
}

TEST(RunSuite, ConfigValidation) {
  RunConfig cfg = small_config();
  cfg.grid.points = 2;
  EXPECT_THROW((void)bcx::run_suite(cfg), bcx::ConfigError);
  cfg = small_config();
  cfg.fd_step = -1.0;
  EXPECT_THROW((void)bcx::run_suite(cfg), bcx::ConfigError);
  cfg = small_config();
  cfg.xi1 = 0.0;
  EXPECT_THROW((void)bcx::run_suite(cfg), bcx::ConfigError);
  cfg = small_config();
  cfg.models[0].a = -3.0;
  EXPECT_THROW((void)bcx::run_suite(cfg), bcx::ConfigError);
  cfg = small_config();
  cfg.classify_op = "nope";
  EXPECT_THROW((void)bcx::run_suite(cfg), bcx::ConfigError);
}

TEST(RunSuite, ClassifyOnlyMode) {
  RunConfig cfg = small_config();
  cfg.mode = RunMode::ClassifyOnly;
  cfg.classify_op = "pti";
  const Report rep = bcx::run_suite(cfg);
  ASSERT_EQ(rep.checks.size(), 2u);  // potential invariance + classification
  EXPECT_EQ(rep.checks[0].name, "symmetry/classification_pti");
  EXPECT_EQ(rep.checks[1].name, "symmetry/potential_invariance_pti");
}

TEST(RunSuite, AlgebraOnlyMode) {
  RunConfig cfg = small_config();
  cfg.mode = RunMode::AlgebraOnly;
  const Report rep = bcx::run_suite(cfg);
  EXPECT_EQ(rep.checks.size(), 6u);
  EXPECT_TRUE(rep.pass());
}

TEST(Report, TextFormatMentionsEveryCheck) {
  RunConfig cfg = small_config();
  cfg.mode = RunMode::AlgebraOnly;
  const Report rep = bcx::run_suite(cfg);
  const std::string text = bcx::emit_report_text(rep);
  EXPECT_NE(text.find("algebra/ring_axioms"), std::string::npos);
  EXPECT_NE(text.find("summary: pass"), std::string::npos);
}

// bcpt: verification driver for the bicomplex oscillator models.
//
//   bcpt verify-algebra [--samples N] [--seed S]
//   bcpt verify-model --family harmonic --a 2 --type I --sign plus
//   bcpt classify --op pti --family isotonic --a 2 --b 6 --type II --sign plus
//
// Global flags: --grid-range, --grid-points, --exclusion-radius, --fd-step,
// --xi1, --xi2, --seed, --workers, --out, --format, --timings, --config FILE.
// Exit status: 0 when every check passes, 1 on a check failure, 2 on a
// configuration error.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bcx/report.hpp"
#include "bcx/verification.hpp"

namespace {

struct ModelFlags {
  std::string family;
  double a = 0.0, b = 0.0;
  std::string type = "I";
  std::string sign = "plus";
  std::string beta3 = "plus";
  std::string beta4 = "plus";
};

void add_model_flags(CLI::App* sub, ModelFlags& mf) {
  sub->add_option("--family", mf.family, "Model family")
      ->required()
      ->check(CLI::IsMember({"harmonic", "inverted", "isotonic"}));
  sub->add_option("--a", mf.a, "Coupling a (harmonic, isotonic)");
  sub->add_option("--b", mf.b, "Coupling b (inverted, isotonic)");
  sub->add_option("--type", mf.type, "Solution type")->check(CLI::IsMember({"I", "II"}));
  sub->add_option("--sign", mf.sign, "Sign branch")->check(CLI::IsMember({"plus", "minus"}));
  sub->add_option("--beta3", mf.beta3, "Isotonic beta3 branch")
      ->check(CLI::IsMember({"plus", "minus"}));
  sub->add_option("--beta4", mf.beta4, "Isotonic beta4 branch")
      ->check(CLI::IsMember({"plus", "minus"}));
}

bcx::SignBranch to_sign(const std::string& s) {
  return s == "plus" ? bcx::SignBranch::Plus : bcx::SignBranch::Minus;
}

bcx::ModelSpec to_spec(const ModelFlags& mf) {
  bcx::ModelSpec spec;
  if (mf.family == "harmonic") spec.family = bcx::Family::Harmonic;
  else if (mf.family == "inverted") spec.family = bcx::Family::Inverted;
  else spec.family = bcx::Family::Isotonic;
  spec.a = mf.a;
  spec.b = mf.b;
  spec.type = mf.type == "I" ? bcx::SolutionType::I : bcx::SolutionType::II;
  spec.sign = to_sign(mf.sign);
  spec.beta3_branch = to_sign(mf.beta3);
  spec.beta4_branch = to_sign(mf.beta4);
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bicomplex extended-phase-space oscillator verifier"};
  app.fallthrough();
  app.set_config("--config", "", "Config file (same keys as the flags)");
  app.require_subcommand(1);

  bcx::RunConfig cfg;
  std::string out_path;
  app.add_option("--grid-range", cfg.grid.range, "Half-width of the grid box per coordinate")
      ->capture_default_str();
  app.add_option("--grid-points", cfg.grid.points, "Grid points per coordinate (>= 3)")
      ->capture_default_str();
  app.add_option("--exclusion-radius", cfg.grid.exclusion_radius,
                 "Exclusion radius around projected singular points")
      ->capture_default_str();
  app.add_option("--fd-step", cfg.fd_step, "Finite-difference step")->capture_default_str();
  app.add_option("--xi1", cfg.xi1, "xi_1 (> 0)")->capture_default_str();
  app.add_option("--xi2", cfg.xi2, "xi_2 (> 0)")->capture_default_str();
  app.add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  app.add_option("--workers", cfg.workers, "Concurrent check workers")->capture_default_str();
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timings", cfg.include_timings, "Include wall times in the report");

  CLI::App* alg = app.add_subcommand("verify-algebra", "Run the algebra and matrix suites");
  alg->add_option("--samples", cfg.algebra_samples, "Random samples")->capture_default_str();

  ModelFlags vm_flags;
  CLI::App* vm = app.add_subcommand("verify-model", "Run the full verification suite for a model");
  add_model_flags(vm, vm_flags);

  ModelFlags cl_flags;
  std::string cl_op;
  CLI::App* cl = app.add_subcommand("classify", "Classify a PT operator on a model state");
  cl->add_option("--op", cl_op, "Operator")->required()->check(CLI::IsMember({"pti", "ptii"}));
  add_model_flags(cl, cl_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (alg->parsed()) {
      cfg.mode = bcx::RunMode::AlgebraOnly;
    } else if (vm->parsed()) {
      cfg.mode = bcx::RunMode::Full;
      cfg.models = {to_spec(vm_flags)};
    } else {
      cfg.mode = bcx::RunMode::ClassifyOnly;
      cfg.models = {to_spec(cl_flags)};
      cfg.classify_op = cl_op;
    }

    const bcx::Report report = bcx::run_suite(cfg);
    const std::string text = bcx::emit_report(report, cfg.format);
    if (out_path.empty()) {
      std::cout << text;
      if (cfg.format == "json") std::cout << "\n";
    } else {
      bcx::write_report_file(report, out_path, cfg.format);
    }
    return report.pass() ? 0 : 1;
  } catch (const bcx::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const bcx::InvalidCoupling& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#pragma once

// Verification suites over models and machine-readable reports.  A run is
// deterministic for a fixed config: every check draws randomness from its own
// RNG seeded by (config seed, check name), checks are sorted by name before
// emission, and doubles are serialized with 17 significant digits.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "bcx/bicomplex.hpp"
#include "bcx/cr_matrix.hpp"
#include "bcx/energy.hpp"
#include "bcx/errors.hpp"
#include "bcx/models.hpp"
#include "bcx/scalar_field.hpp"
#include "bcx/symmetry.hpp"

namespace bcx {

struct Tolerances {
  double algebra = 1e-12;
  double fd = 1e-5;
  double cr_analytic = 1e-6;
  double cr_fd = 1e-4;
  double energy_const = 1e-8;
  double agree = 1e-4;
  double ase = 1e-4;
  double sym = 1e-9;
  double den_eps = 1e-10;
  double sigma_rel = 1e-12;

  [[nodiscard]] bool all_positive() const {
    return algebra > 0 && fd > 0 && cr_analytic > 0 && cr_fd > 0 && energy_const > 0 &&
           agree > 0 && ase > 0 && sym > 0 && den_eps > 0 && sigma_rel > 0;
  }
};

struct GridSpec {
  double range = 1.5;
  int points = 7;
  double exclusion_radius = 0.5;
};

enum class RunMode { Full, AlgebraOnly, ClassifyOnly };

struct RunConfig {
  std::vector<ModelSpec> models;
  GridSpec grid;
  double fd_step = 1e-3;
  Tolerances tol;
  double xi1 = 1.0, xi2 = 1.0;
  std::uint64_t seed = 12345;
  int workers = 1;
  int algebra_samples = 10000;
  int matrix_samples = 1000;
  int energy_probe_points = 50;
  std::string format = "json";
  bool include_timings = false;
  RunMode mode = RunMode::Full;
  std::string classify_op;  // "", "pti" or "ptii"
};

struct CheckRecord {
  std::string name, model, params, detail;
  bool pass = false;
  double max_residual = 0.0;
  std::uint64_t skipped_points = 0;
  double wall_time_ms = 0.0;

  [[nodiscard]] bool operator==(const CheckRecord& o) const = default;
};

struct Report {
  std::string schema_version = "1";
  RunConfig config;
  std::vector<CheckRecord> checks;

  [[nodiscard]] bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// ---- deterministic helpers ----

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  Bicomplex bicomplex(double r) {
    return {uniform(-r, r), uniform(-r, r), uniform(-r, r), uniform(-r, r)};
  }
  PhasePoint point(double r) {
    return {uniform(-r, r), uniform(-r, r), uniform(-r, r), uniform(-r, r)};
  }
};

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace detail

[[nodiscard]] inline std::string spec_params_string(const ModelSpec& s) {
  std::string out = "a=" + detail::fmt_double(s.a) + ";b=" + detail::fmt_double(s.b) +
                    ";type=" + (s.type == SolutionType::I ? "I" : "II") +
                    ";sign=" + (s.sign == SignBranch::Plus ? "plus" : "minus");
  if (s.family == Family::Isotonic) {
    out += std::string(";beta3=") + (s.beta3_branch == SignBranch::Plus ? "plus" : "minus") +
           ";beta4=" + (s.beta4_branch == SignBranch::Plus ? "plus" : "minus");
  }
  return out;
}

// ---- the check battery ----

namespace detail {

struct Check {
  std::string name, model, params;
  std::function<void(CheckRecord&)> run;
};

inline void run_algebra_ring(CheckRecord& rec, std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Bicomplex a = rng.bicomplex(2.0), b = rng.bicomplex(2.0), c = rng.bicomplex(2.0);
    const double scale = std::max(1.0, euclid_norm(a) * euclid_norm(b) * euclid_norm(c));
    worst = std::max(worst, euclid_norm(a * b - b * a) / scale);
    worst = std::max(worst, euclid_norm((a * b) * c - a * (b * c)) / scale);
    worst = std::max(worst, euclid_norm(a * (b + c) - (a * b + a * c)) / scale);
  }
  rec.max_residual = worst;
  rec.pass = worst <= tol;
}

inline void run_algebra_conj(CheckRecord& rec, std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Bicomplex a = rng.bicomplex(2.0), b = rng.bicomplex(2.0);
    for (ConjKind kind : {ConjKind::Conj1, ConjKind::Conj2, ConjKind::Conj3}) {
      const double scale = std::max(1.0, euclid_norm(a) * euclid_norm(b));
      worst = std::max(worst, euclid_norm(conj(a + b, kind) - (conj(a, kind) + conj(b, kind))));
      worst = std::max(worst, euclid_norm(conj(conj(a, kind), kind) - a));
      worst = std::max(worst,
                       euclid_norm(conj(a * b, kind) - conj(a, kind) * conj(b, kind)) / scale);
    }
    worst = std::max(worst, euclid_norm(conj(conj(a, ConjKind::Conj1), ConjKind::Conj2) -
                                        conj(a, ConjKind::Conj3)));
  }
  rec.max_residual = worst;
  rec.pass = worst <= tol;
}

inline void run_algebra_moduli(CheckRecord& rec, std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Bicomplex a = rng.bicomplex(2.0);
    const cplx z1 = a.z1(), z2 = a.z2();
    const double scale = std::max(1.0, euclid_norm(a) * euclid_norm(a));
    const cplx m1 = z1 * z1 + z2 * z2;
    worst = std::max(worst, euclid_norm(modulus_sq(a, ConjKind::Conj1) -
                                        Bicomplex{m1.real(), m1.imag(), 0, 0}) / scale);
    const double n1 = std::norm(z1), n2 = std::norm(z2);
    const cplx cross = z1 * std::conj(z2);
    worst = std::max(worst, euclid_norm(modulus_sq(a, ConjKind::Conj2) -
                                        Bicomplex{n1 - n2, 0, 2 * cross.real(), 0}) / scale);
    worst = std::max(worst, euclid_norm(modulus_sq(a, ConjKind::Conj3) -
                                        Bicomplex{n1 + n2, 0, 0, -2 * cross.imag()}) / scale);
  }
  rec.max_residual = worst;
  rec.pass = worst <= tol;
}

inline void run_algebra_inverse(CheckRecord& rec, std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Bicomplex a = rng.bicomplex(2.0);
    if (is_singular(a, 1e-6)) {
      ++rec.skipped_points;
      continue;
    }
    worst = std::max(worst, euclid_norm(a * inverse(a) - kOne));
  }
  rec.max_residual = worst;
  rec.pass = worst <= tol;
}

inline void run_matrix_homomorphism(CheckRecord& rec, std::uint64_t seed, int samples, double tol) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Bicomplex a = rng.bicomplex(2.0), b = rng.bicomplex(2.0);
    const double scale = std::max(1.0, euclid_norm(a) * euclid_norm(b));
    worst = std::max(worst, (to_matrix(a * b) - to_matrix(a) * to_matrix(b)).frobenius() / scale);
    worst = std::max(worst, (to_matrix(a + b) - (to_matrix(a) + to_matrix(b))).frobenius());
    worst = std::max(worst,
                     std::abs(to_matrix(a).frobenius() - 2.0 * euclid_norm(a)) /
                         std::max(1.0, euclid_norm(a)));
  }
  rec.max_residual = worst;
  rec.pass = worst <= tol;
}

inline void run_matrix_idempotents(CheckRecord& rec) {
  const CRMatrix eps1 = cr_eps1(), eps2 = cr_eps2();
  const CRMatrix want1{{{{0.5, 0, 0, 0.5}, {0, 0.5, -0.5, 0}, {0, -0.5, 0.5, 0}, {0.5, 0, 0, 0.5}}}};
  const CRMatrix want2{{{{0.5, 0, 0, -0.5}, {0, 0.5, 0.5, 0}, {0, 0.5, 0.5, 0}, {-0.5, 0, 0, 0.5}}}};
  rec.max_residual = std::max((eps1 - want1).frobenius(), (eps2 - want2).frobenius());
  rec.pass = rec.max_residual == 0.0;
}

}  // namespace detail

// ---- suite assembly ----

[[nodiscard]] inline Report run_suite(const RunConfig& cfg) {
  if (cfg.grid.points < 3) throw ConfigError("grid.points: need at least 3 points per axis");
  if (!(cfg.grid.range > 0)) throw ConfigError("grid.range: must be positive");
  if (!(cfg.grid.exclusion_radius > 0)) throw ConfigError("grid.exclusion_radius: must be positive");
  if (!(cfg.fd_step > 0)) throw ConfigError("fd_step: must be positive");
  if (!cfg.tol.all_positive()) throw ConfigError("tolerances: all must be positive");
  if (!(cfg.xi1 > 0) || !(cfg.xi2 > 0)) throw ConfigError("xi1/xi2: must be positive");
  if (cfg.workers < 1) throw ConfigError("workers: must be >= 1");
  if (cfg.algebra_samples < 1) throw ConfigError("algebra_samples: must be >= 1");
  if (!cfg.classify_op.empty() && cfg.classify_op != "pti" && cfg.classify_op != "ptii")
    throw ConfigError("classify_op: must be pti or ptii");
  for (const auto& m : cfg.models) {
    try {
      validate(m);
    } catch (const InvalidCoupling& e) {
      throw ConfigError(std::string("model: ") + e.what());
    }
  }

  std::vector<detail::Check> checks;
  const auto seed_for = [&cfg](const std::string& tag) {
    return cfg.seed ^ detail::fnv1a(tag);
  };

  const bool with_algebra = cfg.mode != RunMode::ClassifyOnly;
  const bool with_model = cfg.mode == RunMode::Full;
  const bool with_classify = cfg.mode != RunMode::AlgebraOnly;

  if (with_algebra) {
    checks.push_back({"algebra/ring_axioms", "", "", [&cfg, seed_for](CheckRecord& r) {
                        detail::run_algebra_ring(r, seed_for(r.name), cfg.algebra_samples,
                                                 cfg.tol.algebra);
                      }});
    checks.push_back({"algebra/conjugation_laws", "", "", [&cfg, seed_for](CheckRecord& r) {
                        detail::run_algebra_conj(r, seed_for(r.name), cfg.algebra_samples,
                                                 cfg.tol.algebra);
                      }});
    checks.push_back({"algebra/modulus_identities", "", "", [&cfg, seed_for](CheckRecord& r) {
                        detail::run_algebra_moduli(r, seed_for(r.name), cfg.algebra_samples,
                                                   cfg.tol.algebra);
                      }});
    checks.push_back({"algebra/inverse_law", "", "", [&cfg, seed_for](CheckRecord& r) {
                        detail::run_algebra_inverse(r, seed_for(r.name), cfg.algebra_samples,
                                                    cfg.tol.algebra);
                      }});
    checks.push_back({"matrix/homomorphism", "", "", [&cfg, seed_for](CheckRecord& r) {
                        detail::run_matrix_homomorphism(r, seed_for(r.name), cfg.matrix_samples,
                                                        cfg.tol.algebra);
                      }});
    checks.push_back({"matrix/idempotent_units", "", "",
                      [](CheckRecord& r) { detail::run_matrix_idempotents(r); }});
  }

  for (const ModelSpec& spec : cfg.models) {
    ClosedFormState st = build_state(spec);
    st.exclusion_r2 = cfg.grid.exclusion_radius * cfg.grid.exclusion_radius;
    const std::string model = family_name(spec.family);
    const std::string params = spec_params_string(spec);
    const double h = cfg.fd_step;
    const FDScheme scheme{h};
    const XiSpec xi{cfg.xi1, cfg.xi2};

    if (with_model) {
      checks.push_back({"model/constraint_residuals", model, params, [st](CheckRecord& r) {
                          double worst = 0.0;
                          for (double v : constraint_residuals(st.spec, st.params))
                            worst = std::max(worst, std::abs(v));
                          r.max_residual = worst;
                          r.pass = worst <= 1e-12;
                        }});

      // residuals compared relative to the local derivative scale: the rows
      // equate first partials, whose magnitude grows with the field
      const auto cr_scale = [](const std::array<ScalarField, 4>& fields, const PhasePoint& pt) {
        double s = 1.0;
        for (const auto& f : fields)
          for (double g : f.gradient(pt)) s = std::max(s, std::abs(g));
        return s;
      };

      checks.push_back({"model/cr_quadruple_fd", model, params,
                        [st, &cfg, scheme, cr_scale](CheckRecord& r) {
                          const auto fields = psi_fields(st);
                          const Grid grid = st.default_grid(cfg.grid.range, cfg.grid.points);
                          double worst = 0.0;
                          grid.for_each([&](const PhasePoint& pt) {
                            if (!st.stencil_safe(pt, scheme.h)) {
                              ++r.skipped_points;
                              return;
                            }
                            const double scale = cr_scale(fields, pt);
                            for (double v : check_cr_quadruple(fields, pt, scheme))
                              worst = std::max(worst, std::abs(v) / scale);
                          });
                          r.max_residual = worst;
                          r.pass = worst <= cfg.tol.cr_fd;
                        }});

      checks.push_back(
          {"model/cr_quadruple_analytic", model, params,
           [st, &cfg, scheme, cr_scale](CheckRecord& r) {
             const auto fields = psi_fields(st);
             const Grid grid = st.default_grid(cfg.grid.range, cfg.grid.points);
             double worst = 0.0;
             grid.for_each([&](const PhasePoint& pt) {
               const double scale = cr_scale(fields, pt);
               for (double v : check_cr_quadruple(fields, pt, scheme, EvalMode::Analytic))
                 worst = std::max(worst, std::abs(v) / scale);
             });
             r.max_residual = worst;
             r.pass = worst <= cfg.tol.cr_analytic;
           }});

      checks.push_back({"model/energy_constancy_g", model, params,
                        [st, &cfg, seed_for, scheme](CheckRecord& r) {
                          detail::Rng rng(seed_for(r.name + "/" + r.model + "/" + r.params));
                          std::array<double, 4> lo{}, hi{};
                          bool first = true;
                          int found = 0;
                          double worst_pred = 0.0;
                          while (found < cfg.energy_probe_points) {
                            const PhasePoint pt = rng.point(cfg.grid.range);
                            if (!st.admissible(pt) || !st.stencil_safe(pt, 0.05)) {
                              ++r.skipped_points;
                              continue;
                            }
                            const EnergyQuad e = energy_from_g(st, pt);
                            const std::array<double, 4> c{e.e1, e.e2, e.e3, e.e4};
                            const std::array<double, 4> p{st.energy.e1, st.energy.e2, st.energy.e3,
                                                          st.energy.e4};
                            for (int i = 0; i < 4; ++i) {
                              lo[i] = first ? c[i] : std::min(lo[i], c[i]);
                              hi[i] = first ? c[i] : std::max(hi[i], c[i]);
                              worst_pred = std::max(worst_pred, std::abs(c[i] - p[i]));
                            }
                            first = false;
                            ++found;
                          }
                          double spread = 0.0;
                          for (int i = 0; i < 4; ++i) spread = std::max(spread, hi[i] - lo[i]);
                          r.max_residual = std::max(spread, worst_pred);
                          r.pass = r.max_residual <= cfg.tol.energy_const;
                        }});

      checks.push_back({"model/energy_cross_agreement", model, params,
                        [st, &cfg, seed_for, scheme, xi](CheckRecord& r) {
                          detail::Rng rng(seed_for(r.name + "/" + r.model + "/" + r.params));
                          int found = 0;
                          double worst = 0.0;
                          while (found < cfg.energy_probe_points) {
                            const PhasePoint pt = rng.point(cfg.grid.range);
                            if (!st.admissible(pt) || !st.stencil_safe(pt, 0.05)) {
                              ++r.skipped_points;
                              continue;
                            }
                            const EnergyQuad eg = energy_from_g(st, pt);
                            const EnergyQuad ep = energy_from_psi(st, pt,
                                                                  EvalMode::FiniteDifference,
                                                                  scheme, cfg.tol.den_eps);
                            worst = std::max({worst, std::abs(eg.e1 - ep.e1),
                                              std::abs(eg.e2 - ep.e2), std::abs(eg.e3 - ep.e3),
                                              std::abs(eg.e4 - ep.e4)});
                            worst = std::max({worst, std::abs(ep.e1 - st.energy.e1),
                                              std::abs(ep.e2 - st.energy.e2),
                                              std::abs(ep.e3 - st.energy.e3),
                                              std::abs(ep.e4 - st.energy.e4)});
                            ++found;
                          }
                          r.max_residual = worst;
                          r.pass = worst <= cfg.tol.agree;
                        }});

      checks.push_back({"model/ase_residual", model, params, [st, &cfg, xi](CheckRecord& r) {
                          const Grid grid = st.default_grid(cfg.grid.range, cfg.grid.points);
                          double worst = 0.0;
                          grid.for_each([&](const PhasePoint& pt) {
                            try {
                              worst = std::max(worst, ase_residual(st, xi, pt, cfg.fd_step));
                            } catch (const DegenerateProjection&) {
                              ++r.skipped_points;
                            }
                          });
                          r.max_residual = worst;
                          r.pass = worst <= cfg.tol.ase;
                        }});
    }

    if (with_classify) {
      for (SymmetryOpKind kind : {SymmetryOpKind::PTi, SymmetryOpKind::PTii}) {
        const std::string tag = op_name(kind);
        if (!cfg.classify_op.empty() && tag != cfg.classify_op) continue;
        checks.push_back({"symmetry/potential_invariance_" + tag, model, params,
                          [st, &cfg, kind](CheckRecord& r) {
                            const Grid grid = st.default_grid(cfg.grid.range, cfg.grid.points);
                            r.max_residual = check_potential_invariance(SymmetryOp{kind}, st.spec,
                                                                        grid, st.exclusion_r2);
                            r.pass = r.max_residual <= cfg.tol.sym;
                          }});
        checks.push_back({"symmetry/classification_" + tag, model, params,
                          [st, &cfg, kind](CheckRecord& r) {
                            const Grid grid = st.default_grid(cfg.grid.range, cfg.grid.points);
                            const ClassificationReport rep =
                                classify(SymmetryOp{kind}, st, grid, cfg.tol.sym);
                            r.max_residual = rep.max_deviation;
                            r.skipped_points = rep.points_skipped;
                            const bool unbroken = rep.verdict == Verdict::Unbroken;
                            r.detail = unbroken ? "unbroken;lambda=" +
                                                      detail::fmt_double(rep.lambda.x1) + "," +
                                                      detail::fmt_double(rep.lambda.x2) + "," +
                                                      detail::fmt_double(rep.lambda.x3) + "," +
                                                      detail::fmt_double(rep.lambda.x4)
                                                : "broken";
                            bool ok = rep.reliable;
                            if (unbroken)
                              ok = ok && unbroken_energy_constraint(kind, st.energy) <= cfg.tol.sym;
                            r.pass = ok;
                          }});
      }
    }
  }

  // execute (whole checks in parallel when workers > 1; each check is sequential)
  std::vector<CheckRecord> records(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= checks.size()) return;
      CheckRecord& rec = records[i];
      rec.name = checks[i].name;
      rec.model = checks[i].model;
      rec.params = checks[i].params;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        checks[i].run(rec);
      } catch (const std::exception& e) {
        rec.pass = false;
        rec.detail = std::string("error: ") + e.what();
      }
      if (cfg.include_timings) {
        rec.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
      }
    }
  };
  if (cfg.workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < cfg.workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.name, a.model, a.params) < std::tie(b.name, b.model, b.params);
  });

  Report rep;
  rep.config = cfg;
  rep.checks = std::move(records);
  return rep;
}

}  // namespace bcx

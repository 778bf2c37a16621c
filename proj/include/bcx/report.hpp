#pragma once

// Report serialization: a hand-rolled JSON writer (stable field order, doubles
// with 17 significant digits, byte-identical for identical runs) and a parser
// for round-tripping.

#include <fstream>
#include <string>

#include <json.hpp>

#include "bcx/errors.hpp"
#include "bcx/verification.hpp"

namespace bcx {

namespace detail {

[[nodiscard]] inline std::string family_token(Family f) { return family_name(f); }

[[nodiscard]] inline Family family_from(const std::string& s) {
  if (s == "harmonic") return Family::Harmonic;
  if (s == "inverted") return Family::Inverted;
  if (s == "isotonic") return Family::Isotonic;
  throw IoError("unknown family: " + s);
}

[[nodiscard]] inline std::string sign_token(SignBranch s) {
  return s == SignBranch::Plus ? "plus" : "minus";
}

[[nodiscard]] inline SignBranch sign_from(const std::string& s) {
  if (s == "plus") return SignBranch::Plus;
  if (s == "minus") return SignBranch::Minus;
  throw IoError("unknown sign: " + s);
}

[[nodiscard]] inline std::string mode_token(RunMode m) {
  switch (m) {
    case RunMode::Full: return "full";
    case RunMode::AlgebraOnly: return "algebra";
    default: return "classify";
  }
}

[[nodiscard]] inline RunMode mode_from(const std::string& s) {
  if (s == "full") return RunMode::Full;
  if (s == "algebra") return RunMode::AlgebraOnly;
  if (s == "classify") return RunMode::ClassifyOnly;
  throw IoError("unknown run mode: " + s);
}

}  // namespace detail

[[nodiscard]] inline std::string emit_report_json(const Report& rep) {
  using detail::fmt_double;
  using detail::json_escape;
  std::string out;
  out += "{\"schema_version\":\"" + rep.schema_version + "\",";
  out += "\"config_echo\":{";
  out += "\"models\":[";
  const auto& cfg = rep.config;
  for (std::size_t i = 0; i < cfg.models.size(); ++i) {
    const ModelSpec& m = cfg.models[i];
    if (i) out += ",";
    out += "{\"family\":\"" + detail::family_token(m.family) + "\",";
    out += "\"a\":" + fmt_double(m.a) + ",\"b\":" + fmt_double(m.b) + ",";
    out += std::string("\"type\":\"") + (m.type == SolutionType::I ? "I" : "II") + "\",";
    out += "\"sign\":\"" + detail::sign_token(m.sign) + "\",";
    out += "\"beta3\":\"" + detail::sign_token(m.beta3_branch) + "\",";
    out += "\"beta4\":\"" + detail::sign_token(m.beta4_branch) + "\"}";
  }
  out += "],";
  out += "\"grid_range\":" + fmt_double(cfg.grid.range) + ",";
  out += "\"grid_points\":" + std::to_string(cfg.grid.points) + ",";
  out += "\"exclusion_radius\":" + fmt_double(cfg.grid.exclusion_radius) + ",";
  out += "\"fd_step\":" + fmt_double(cfg.fd_step) + ",";
  out += "\"tolerances\":{";
  out += "\"algebra\":" + fmt_double(cfg.tol.algebra) + ",";
  out += "\"fd\":" + fmt_double(cfg.tol.fd) + ",";
  out += "\"cr_analytic\":" + fmt_double(cfg.tol.cr_analytic) + ",";
  out += "\"cr_fd\":" + fmt_double(cfg.tol.cr_fd) + ",";
  out += "\"energy_const\":" + fmt_double(cfg.tol.energy_const) + ",";
  out += "\"agree\":" + fmt_double(cfg.tol.agree) + ",";
  out += "\"ase\":" + fmt_double(cfg.tol.ase) + ",";
  out += "\"sym\":" + fmt_double(cfg.tol.sym) + ",";
  out += "\"den_eps\":" + fmt_double(cfg.tol.den_eps) + ",";
  out += "\"sigma_rel\":" + fmt_double(cfg.tol.sigma_rel) + "},";
  out += "\"xi1\":" + fmt_double(cfg.xi1) + ",\"xi2\":" + fmt_double(cfg.xi2) + ",";
  out += "\"seed\":" + std::to_string(cfg.seed) + ",";
  out += "\"workers\":" + std::to_string(cfg.workers) + ",";
  out += "\"algebra_samples\":" + std::to_string(cfg.algebra_samples) + ",";
  out += "\"matrix_samples\":" + std::to_string(cfg.matrix_samples) + ",";
  out += "\"energy_probe_points\":" + std::to_string(cfg.energy_probe_points) + ",";
  out += "\"format\":\"" + json_escape(cfg.format) + "\",";
  out += std::string("\"include_timings\":") + (cfg.include_timings ? "true" : "false") + ",";
  out += "\"mode\":\"" + detail::mode_token(cfg.mode) + "\",";
  out += "\"classify_op\":\"" + json_escape(cfg.classify_op) + "\"},";
  out += "\"checks\":[";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const CheckRecord& c = rep.checks[i];
    if (i) out += ",";
    out += "{\"name\":\"" + json_escape(c.name) + "\",";
    out += "\"model\":\"" + json_escape(c.model) + "\",";
    out += "\"params\":\"" + json_escape(c.params) + "\",";
    out += "\"detail\":\"" + json_escape(c.detail) + "\",";
    out += std::string("\"verdict\":\"") + (c.pass ? "pass" : "fail") + "\",";
    out += "\"max_residual\":" + fmt_double(c.max_residual) + ",";
    out += "\"skipped_points\":" + std::to_string(c.skipped_points);
    if (cfg.include_timings) out += ",\"wall_time_ms\":" + fmt_double(c.wall_time_ms);
    out += "}";
  }
  out += "],";
  out += std::string("\"summary\":\"") + (rep.pass() ? "pass" : "fail") + "\"}";
  return out;
}

[[nodiscard]] inline std::string emit_report_text(const Report& rep) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-36s %-9s %-34s %-6s %-13s %s\n", "check", "model", "params",
                "result", "max residual", "skipped");
  out += line;
  out += std::string(110, '-') + "\n";
  for (const CheckRecord& c : rep.checks) {
    std::snprintf(line, sizeof line, "%-36s %-9s %-34s %-6s %-13.4g %llu\n", c.name.c_str(),
                  c.model.c_str(), c.params.c_str(), c.pass ? "pass" : "FAIL", c.max_residual,
                  static_cast<unsigned long long>(c.skipped_points));
    out += line;
    if (!c.detail.empty()) out += "    " + c.detail + "\n";
  }
  out += std::string(110, '-') + "\n";
  out += std::string("summary: ") + (rep.pass() ? "pass" : "FAIL") + "\n";
  return out;
}

[[nodiscard]] inline std::string emit_report(const Report& rep, const std::string& format) {
  if (format == "json") return emit_report_json(rep);
  if (format == "text") return emit_report_text(rep);
  throw IoError("unknown report format: " + format);
}

[[nodiscard]] inline Report parse_report(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("report parse: ") + e.what());
  }
  Report rep;
  rep.schema_version = j.at("schema_version").get<std::string>();
  const auto& ce = j.at("config_echo");
  RunConfig& cfg = rep.config;
  for (const auto& m : ce.at("models")) {
    ModelSpec spec;
    spec.family = detail::family_from(m.at("family").get<std::string>());
    spec.a = m.at("a").get<double>();
    spec.b = m.at("b").get<double>();
    spec.type = m.at("type").get<std::string>() == "I" ? SolutionType::I : SolutionType::II;
    spec.sign = detail::sign_from(m.at("sign").get<std::string>());
    spec.beta3_branch = detail::sign_from(m.at("beta3").get<std::string>());
    spec.beta4_branch = detail::sign_from(m.at("beta4").get<std::string>());
    cfg.models.push_back(spec);
  }
  cfg.grid.range = ce.at("grid_range").get<double>();
  cfg.grid.points = ce.at("grid_points").get<int>();
  cfg.grid.exclusion_radius = ce.at("exclusion_radius").get<double>();
  cfg.fd_step = ce.at("fd_step").get<double>();
  const auto& t = ce.at("tolerances");
  cfg.tol.algebra = t.at("algebra").get<double>();
  cfg.tol.fd = t.at("fd").get<double>();
  cfg.tol.cr_analytic = t.at("cr_analytic").get<double>();
  cfg.tol.cr_fd = t.at("cr_fd").get<double>();
  cfg.tol.energy_const = t.at("energy_const").get<double>();
  cfg.tol.agree = t.at("agree").get<double>();
  cfg.tol.ase = t.at("ase").get<double>();
  cfg.tol.sym = t.at("sym").get<double>();
  cfg.tol.den_eps = t.at("den_eps").get<double>();
  cfg.tol.sigma_rel = t.at("sigma_rel").get<double>();
  cfg.xi1 = ce.at("xi1").get<double>();
  cfg.xi2 = ce.at("xi2").get<double>();
  cfg.seed = ce.at("seed").get<std::uint64_t>();
  cfg.workers = ce.at("workers").get<int>();
  cfg.algebra_samples = ce.at("algebra_samples").get<int>();
  cfg.matrix_samples = ce.at("matrix_samples").get<int>();
  cfg.energy_probe_points = ce.at("energy_probe_points").get<int>();
  cfg.format = ce.at("format").get<std::string>();
  cfg.include_timings = ce.at("include_timings").get<bool>();
  cfg.mode = detail::mode_from(ce.at("mode").get<std::string>());
  cfg.classify_op = ce.at("classify_op").get<std::string>();
  for (const auto& c : j.at("checks")) {
    CheckRecord r;
    r.name = c.at("name").get<std::string>();
    r.model = c.at("model").get<std::string>();
    r.params = c.at("params").get<std::string>();
    r.detail = c.at("detail").get<std::string>();
    r.pass = c.at("verdict").get<std::string>() == "pass";
    r.max_residual = c.at("max_residual").get<double>();
    r.skipped_points = c.at("skipped_points").get<std::uint64_t>();
    if (c.contains("wall_time_ms")) r.wall_time_ms = c.at("wall_time_ms").get<double>();
    rep.checks.push_back(r);
  }
  return rep;
}

inline void write_report_file(const Report& rep, const std::string& path,
                              const std::string& format) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open output file: " + path);
  f << emit_report(rep, format);
  if (!f) throw IoError("failed writing output file: " + path);
}

}  // namespace bcx

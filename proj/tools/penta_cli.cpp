// Batch front end: every subcommand reads JSON (stdin or --in), writes a
// JSON result envelope (stdout or --out) and exits 0 on success, 1 when a
// mathematical check fails, 2 on invalid input.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "penta/json_io.hpp"
#include "penta/lift.hpp"
#include "penta/oracle.hpp"

namespace {

using penta::Json;

enum class Status { kOk, kInvalidInput, kCheckFailed };

struct CommandResult {
  Status status = Status::kOk;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;
};

const char* status_name(Status s) {
  switch (s) {
    case Status::kOk:
      return "ok";
    case Status::kInvalidInput:
      return "invalid-input";
    default:
      return "check-failed";
  }
}

int status_code(Status s) {
  switch (s) {
    case Status::kOk:
      return 0;
    case Status::kInvalidInput:
      return 2;
    default:
      return 1;
  }
}

struct IoOptions {
  std::string in_path;   // empty = stdin
  std::string out_path;  // empty = stdout
};

struct TolOptions {
  double boundary_tol = penta::Tolerances{}.boundary_tol;
  double member_tol = penta::Tolerances{}.member_tol;
  std::string alpha_grid = "32x64";

  penta::Tolerances resolve() const {
    penta::Tolerances tol;
    tol.boundary_tol = boundary_tol;
    tol.member_tol = member_tol;
    const auto sep = alpha_grid.find('x');
    if (sep == std::string::npos)
      throw std::invalid_argument("--alpha-grid expects RADIALxANGULAR, e.g. 32x64");
    try {
      tol.alpha_grid.radial = std::stoi(alpha_grid.substr(0, sep));
      tol.alpha_grid.angular = std::stoi(alpha_grid.substr(sep + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("--alpha-grid counts must be integers, e.g. 32x64");
    }
    if (!tol.is_valid())
      throw std::invalid_argument(
          "tolerances must be positive and grid counts at least 8");
    return tol;
  }
};

void add_tol_flags(CLI::App* cmd, TolOptions& tol) {
  cmd->add_option("--tol-boundary", tol.boundary_tol,
                  "slack for boundary identities (default 1e-9)");
  cmd->add_option("--tol-member", tol.member_tol,
                  "slack for membership sweeps (default 1e-7)");
  cmd->add_option("--alpha-grid", tol.alpha_grid,
                  "alpha sweep resolution RADIALxANGULAR (default 32x64)");
}

void add_io_flags(CLI::App* cmd, IoOptions& io) {
  cmd->add_option("--in", io.in_path, "read input JSON from this file instead of stdin");
  cmd->add_option("--out", io.out_path, "write the result to this file instead of stdout");
}

Json read_input(const IoOptions& io) {
  std::string text;
  if (io.in_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream f(io.in_path);
    if (!f) throw std::invalid_argument("cannot open input file " + io.in_path);
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") + e.what());
  }
}

Json predicate_entry(bool member, double residual) {
  return Json{{"member", member}, {"residual", residual}};
}

// Commands that consume inner-function data also accept the envelope
// another command produced, so subcommands pipe into each other.
const Json& unwrap_function(const Json& j) {
  if (j.is_object()) {
    if (j.contains("payload") && j["payload"].is_object() && j["payload"].contains("function"))
      return j["payload"]["function"];
    if (j.contains("function")) return j["function"];
  }
  return j;
}

CommandResult cmd_check_point(const Json& input, const penta::Tolerances& tol) {
  const penta::Point3 x = penta::point3_from_json(input);
  const penta::Point2 sp = x.sp();

  const auto [z1, z2] = penta::gamma_quadratic_roots(sp);
  const double gamma_residual = std::max(std::abs(z1), std::abs(z2)) - 1.0;
  const bool gamma_closed = penta::in_gamma(sp, tol);

  CommandResult result;
  result.payload["point"] = penta::to_json(x);
  result.payload["gamma_closed"] = predicate_entry(gamma_closed, gamma_residual);
  result.payload["gamma_open"] =
      predicate_entry(penta::in_gamma(sp, tol, /*strict=*/true), gamma_residual);
  result.payload["b_gamma"] =
      predicate_entry(penta::in_b_gamma(sp, tol), penta::b_gamma_residual(sp));
  result.payload["closed_pentablock"] = predicate_entry(
      penta::in_closed_penta(x, tol),
      gamma_closed ? penta::sup_abs_psi(x, tol) - 1.0 : gamma_residual);
  result.payload["k0"] = predicate_entry(penta::in_K0(x, tol), penta::k0_residual(x));
  result.payload["k1"] = predicate_entry(penta::in_K1(x, tol), penta::k1_residual(x));
  return result;
}

Json k0_residuals_json(const penta::Point3& x) {
  return Json{{"p_modulus", std::abs(std::abs(x.p) - 1.0)},
              {"s_conj_p", std::abs(x.s - std::conj(x.s) * x.p)},
              {"s_bound", std::max(std::abs(x.s) - 2.0, 0.0)},
              {"flatness", std::abs(std::norm(x.a) - (1.0 - 0.25 * std::norm(x.s)))}};
}

CommandResult cmd_lift(const Json& input, const penta::Tolerances& tol) {
  const penta::Point3 x = penta::point3_from_json(input);
  CommandResult result;
  try {
    const penta::LiftResult lifted = penta::lift_to_unitary(x, tol);
    result.payload["unitary"] = penta::to_json(lifted.unitary);
    result.payload["unitarity_residual"] = penta::unitarity_residual(lifted.unitary);
    result.payload["k0_residuals"] = k0_residuals_json(x);
    if (lifted.warning) result.diagnostics.push_back(*lifted.warning);
  } catch (const std::exception& e) {
    result.status = Status::kCheckFailed;
    result.payload["k0_residuals"] = k0_residuals_json(x);
    result.diagnostics.push_back(e.what());
  }
  return result;
}

CommandResult cmd_project(const Json& input, const penta::Tolerances& tol) {
  const penta::Matrix2 u = penta::matrix2_from_json(input);
  CommandResult result;
  try {
    const penta::Point3 x = penta::project_from_unitary(u, tol);
    result.payload["point"] = penta::to_json(x);
    result.payload["unitarity_residual"] = penta::unitarity_residual(u);
    result.payload["diagonal_residual"] = std::abs(u.u11 - u.u22);
    result.payload["k0_residual"] = penta::k0_residual(x);
  } catch (const std::exception& e) {
    result.status = Status::kCheckFailed;
    result.payload["unitarity_residual"] = penta::unitarity_residual(u);
    result.payload["diagonal_residual"] = std::abs(u.u11 - u.u22);
    result.diagnostics.push_back(e.what());
  }
  return result;
}

CommandResult cmd_make_inner(const Json& input, const penta::Tolerances& tol) {
  const penta::PentaInnerData data = penta::penta_inner_data_from_json(unwrap_function(input));
  CommandResult result;
  try {
    const penta::PentaInnerFunction x =
        penta::make_penta_inner(data.blaschke, data.n1, data.n2, data.d, data.bound, tol);
    result.payload["function"] = penta::to_json(x);
  } catch (const penta::ValidationError& e) {
    result.status = Status::kCheckFailed;
    result.payload["violated_condition"] = e.condition();
    result.diagnostics.push_back(e.what());
  }
  return result;
}

CommandResult cmd_verify_inner(const Json& input, const penta::Tolerances& tol,
                               int circle_samples, int disc_samples) {
  const penta::PentaInnerData data = penta::penta_inner_data_from_json(unwrap_function(input));
  const penta::PentaInnerFunction x =
      penta::PentaInnerFunction::unchecked(data.blaschke, data.n1, data.n2, data.d, data.bound);
  const penta::VerificationReport report =
      penta::verify_penta_inner(x, circle_samples, disc_samples, tol);

  CommandResult result;
  result.payload["report"] = penta::to_json(report);
  if (!report.pass) {
    result.status = Status::kCheckFailed;
    result.diagnostics.push_back("verification failed; see report residuals");
  }
  return result;
}

CommandResult cmd_beta_example(const std::string& beta_text) {
  Json beta_json;
  try {
    beta_json = Json::parse(beta_text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("--beta is not valid JSON: ") + e.what());
  }
  CommandResult result;
  result.payload["function"] =
      penta::to_json(penta::make_beta_example(penta::complex_from_json(beta_json)));
  return result;
}

CommandResult cmd_b0b_example(const Json& input) {
  CommandResult result;
  result.payload["function"] =
      penta::to_json(penta::make_B0B_example(penta::blaschke_from_json(input)));
  return result;
}

CommandResult cmd_normalize(const Json& input, const penta::Tolerances& tol) {
  const penta::PentaInnerData data = penta::penta_inner_data_from_json(unwrap_function(input));
  CommandResult result;
  try {
    const penta::PentaInnerFunction x =
        penta::make_penta_inner(data.blaschke, data.n1, data.n2, data.d, data.bound, tol);
    const auto [canonical, witness] = penta::normalize_triple(x);
    result.payload["function"] = penta::to_json(canonical);
    result.payload["t"] = witness.t;
  } catch (const penta::ValidationError& e) {
    result.status = Status::kCheckFailed;
    result.payload["violated_condition"] = e.condition();
    result.diagnostics.push_back(e.what());
  }
  return result;
}

CommandResult cmd_audit(std::uint64_t seed, int count, double margin,
                        const penta::Tolerances& tol) {
  const penta::SamplerConfig cfg{seed, count, margin};
  if (!cfg.is_valid())
    throw std::invalid_argument("audit: count must be >= 1 and margin in (0, 1)");
  const penta::AuditReport report = penta::audit(cfg, tol);

  CommandResult result;
  result.payload = penta::to_json(report);
  if (!report.all_passed()) {
    result.status = Status::kCheckFailed;
    result.diagnostics.push_back("at least one audit campaign has failures");
  }
  return result;
}

int emit(const CommandResult& result, const IoOptions& io) {
  Json envelope;
  envelope["status"] = status_name(result.status);
  envelope["payload"] = result.payload;
  envelope["diagnostics"] = result.diagnostics;
  const std::string text = penta::dump_json(envelope) + "\n";

  if (io.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(io.out_path);
    if (!f) {
      std::cerr << "cannot open output file " << io.out_path << "\n";
      return 2;
    }
    f << text;
  }
  return status_code(result.status);
}

int emit_error(Status status, const std::string& message, const IoOptions& io) {
  CommandResult result;
  result.status = status;
  result.diagnostics.push_back(message);
  return emit(result, io);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pentablock: membership tests, distinguished-boundary lifting and "
               "rational inner-function tools"};
  app.require_subcommand(1);

  IoOptions io;
  TolOptions tol_options;

  auto* check_point = app.add_subcommand(
      "check-point", "evaluate all membership predicates on a point {a, s, p}");
  add_io_flags(check_point, io);
  add_tol_flags(check_point, tol_options);

  auto* lift = app.add_subcommand(
      "lift", "lift a distinguished-boundary point to its unique equal-diagonal unitary");
  add_io_flags(lift, io);
  add_tol_flags(lift, tol_options);

  auto* project = app.add_subcommand(
      "project", "project an equal-diagonal unitary to (u21, tr, det)");
  add_io_flags(project, io);
  add_tol_flags(project, tol_options);

  auto* make_inner = app.add_subcommand(
      "make-inner", "validate inner-function data {blaschke, N1, N2, D, n}");
  add_io_flags(make_inner, io);
  add_tol_flags(make_inner, tol_options);

  int circle_samples = 256;
  int disc_samples = 100;
  auto* verify_inner = app.add_subcommand(
      "verify-inner", "sample the boundary identity and interior membership of inner-function data");
  add_io_flags(verify_inner, io);
  add_tol_flags(verify_inner, tol_options);
  verify_inner->add_option("--circle-samples", circle_samples, "circle sample count (>= 16)");
  verify_inner->add_option("--disc-samples", disc_samples, "interior sample count (>= 16)");

  std::string beta_text = "[1, 0]";
  auto* beta_example = app.add_subcommand(
      "beta-example", "one-parameter family ((b - conj(b) l)/2, b + conj(b) l, l)");
  add_io_flags(beta_example, io);
  beta_example->add_option("--beta", beta_text, "unimodular parameter as [re, im]");

  auto* b0b_example =
      app.add_subcommand("b0b-example", "the family (B, 0, B) from a Blaschke product");
  add_io_flags(b0b_example, io);

  auto* normalize = app.add_subcommand(
      "normalize", "canonical real-scalar representative of inner-function data");
  add_io_flags(normalize, io);
  add_tol_flags(normalize, tol_options);

  std::uint64_t seed = 0;
  int count = 1000;
  double margin = 0.01;
  auto* audit_cmd = app.add_subcommand(
      "audit", "run the four matrix-sampling campaigns against the predicates");
  add_io_flags(audit_cmd, io);
  add_tol_flags(audit_cmd, tol_options);
  audit_cmd->add_option("--seed", seed, "master seed (default 0)");
  audit_cmd->add_option("--count", count, "samples per campaign (default 1000)");
  audit_cmd->add_option("--margin", margin, "contraction margin in (0, 1) (default 0.01)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const penta::Tolerances tol = tol_options.resolve();
    CommandResult result;
    if (check_point->parsed()) {
      result = cmd_check_point(read_input(io), tol);
    } else if (lift->parsed()) {
      result = cmd_lift(read_input(io), tol);
    } else if (project->parsed()) {
      result = cmd_project(read_input(io), tol);
    } else if (make_inner->parsed()) {
      result = cmd_make_inner(read_input(io), tol);
    } else if (verify_inner->parsed()) {
      result = cmd_verify_inner(read_input(io), tol, circle_samples, disc_samples);
    } else if (beta_example->parsed()) {
      result = cmd_beta_example(beta_text);
    } else if (b0b_example->parsed()) {
      result = cmd_b0b_example(read_input(io));
    } else if (normalize->parsed()) {
      result = cmd_normalize(read_input(io), tol);
    } else {
      result = cmd_audit(seed, count, margin, tol);
    }
    return emit(result, io);
  } catch (const std::invalid_argument& e) {
    return emit_error(Status::kInvalidInput, e.what(), io);
  } catch (const std::exception& e) {
    return emit_error(Status::kCheckFailed, e.what(), io);
  }
}

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "steklov/dtn_oracle.hpp"
#include "steklov/errors.hpp"
#include "steklov/io.hpp"
#include "steklov/perturbation.hpp"
#include "steklov/special_functions.hpp"
#include "steklov/verify.hpp"

namespace steklov::cli {

namespace {

using io::json;

struct Config {
  std::string command;
  int dim = 3;
  int k = 1;
  int kmax = 0;
  std::string rho_path;
  int quad_degree = -1;
  double tol = -1.0;
  std::string route = "wigner";
  std::string out_path;
  std::vector<double> eps{4e-3, 2e-3, 1e-3};
  int band_limit = -1;
  std::string suite;
  int xi_max = 3;
  std::optional<std::uint64_t> node_cap;
};

json config_json(const Config& c) {
  json j{{"command", c.command}, {"dim", c.dim}};
  if (c.command != "verify") j["k"] = c.k;
  if (c.kmax > 0) j["kmax"] = c.kmax;
  if (!c.rho_path.empty()) j["rho"] = c.rho_path;
  if (c.quad_degree >= 0) j["quad_degree"] = c.quad_degree;
  if (c.tol >= 0) j["tol"] = c.tol;
  if (c.command == "spectrum" || c.command == "matrix" || c.command == "table") j["route"] = c.route;
  if (c.command == "oracle-slope") {
    j["eps"] = c.eps;
    if (c.band_limit >= 0) j["L"] = c.band_limit;
  }
  if (c.command == "verify") j["suite"] = c.suite;
  if (c.command == "diagnose-p2k") j["xi_max"] = c.xi_max;
  if (c.node_cap) j["node_cap"] = *c.node_cap;
  return j;
}

PerturbationFunction load_rho(const Config& c) {
  if (c.rho_path.empty()) return PerturbationFunction(c.dim);
  PerturbationFunction rho = io::load_perturbation(c.rho_path);
  if (rho.dim() != c.dim)
    throw ParseError("perturbation file has d = " + std::to_string(rho.dim()) + " but --dim is " +
                     std::to_string(c.dim));
  return rho;
}

std::uint64_t node_cap(const Config& c) { return c.node_cap ? *c.node_cap : quadrature::default_node_cap(); }

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file: " + c.out_path);
  f << text;
}

struct Assembled {
  PerturbMatrix matrix;
  std::optional<double> cross_route_diff;
};

Assembled assemble(const Config& c, int k, const PerturbationFunction& rho) {
  Assembled a;
  if (c.route == "quadrature") {
    a.matrix = perturbation::assemble_matrix_quadrature(k, rho, c.quad_degree, node_cap(c));
    return a;
  }
  a.matrix = perturbation::assemble_matrix_wigner(k, rho);
  if (c.route == "both") {
    const auto q = perturbation::assemble_matrix_quadrature(k, rho, c.quad_degree, node_cap(c));
    const double diff = max_abs_diff(a.matrix.m, q.m);
    const double tol = c.tol >= 0 ? c.tol : 1e-9;
    if (diff > tol)
      throw ContractViolation("routes disagree: max entry difference " + io::format_double(diff) + " > " +
                              io::format_double(tol));
    a.cross_route_diff = diff;
  }
  return a;
}

double no_negative_zero(double v) { return v + 0.0; }

void require_k(int k) {
  if (k < 1) throw DomainError("--k must be >= 1");
}

int cmd_spectrum(const Config& c, std::ostream& out) {
  require_k(c.k);
  const PerturbationFunction rho = load_rho(c);
  const Assembled a = assemble(c, c.k, rho);
  const auto rep = perturbation::eigen_spectrum(a.matrix, rho.mean_coefficient());
  json j = io::to_json(rep);
  const auto branches = perturbation::normalized_expansion(rep);
  j["Lambda0"] = branches.empty() ? 0.0 : branches.front().lambda0;
  json l1 = json::array();
  for (const auto& b : branches) l1.push_back(b.lambda1);
  j["Lambda1"] = l1;
  j["route"] = c.route;
  if (a.cross_route_diff) j["cross_route_max_diff"] = *a.cross_route_diff;
  j["config"] = config_json(c);
  emit(c, j.dump(2) + "\n", out);
  return kOk;
}

int cmd_matrix(const Config& c, std::ostream& out) {
  require_k(c.k);
  const PerturbationFunction rho = load_rho(c);
  const Assembled a = assemble(c, c.k, rho);
  json j = io::to_json(a.matrix);
  if (a.cross_route_diff) j["cross_route_max_diff"] = *a.cross_route_diff;
  j["config"] = config_json(c);
  emit(c, j.dump(2) + "\n", out);
  return kOk;
}

int cmd_table(const Config& c, std::ostream& out) {
  const PerturbationFunction rho = load_rho(c);
  int k_lo = c.k, k_hi = c.k;
  if (c.kmax > 0) {
    k_lo = 1;
    k_hi = c.kmax;
  }
  require_k(k_lo);
  std::vector<io::TableRow> rows;
  for (int k = k_lo; k <= k_hi; ++k) {
    const Assembled a = assemble(c, k, rho);
    const auto r = io::table_rows(perturbation::eigen_spectrum(a.matrix, rho.mean_coefficient()));
    rows.insert(rows.end(), r.begin(), r.end());
  }
  std::vector<std::string> comments{"config " + config_json(c).dump()};
  if (!c.rho_path.empty()) comments.push_back("rho " + io::to_json(rho).dump());
  emit(c, io::table_csv(rows, comments), out);
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  verify::Options opt;
  opt.d = c.dim;
  opt.kmax = c.kmax > 0 ? c.kmax : (c.suite == "oracle" ? 1 : 3);
  opt.tol = c.tol;
  if (!c.rho_path.empty()) opt.rho = load_rho(c);
  const auto results = verify::run_suite(c.suite, opt);
  bool all = true;
  std::string text;
  for (const auto& r : results) {
    all = all && r.passed;
    text += std::string(r.passed ? "PASS " : "FAIL ") + r.name + " residual=" + io::format_double(r.residual) +
            " tol=" + io::format_double(r.tolerance) + "\n";
  }
  text += "suite " + c.suite + (all ? ": all checks passed\n" : ": FAILED\n");
  emit(c, text, out);
  return all ? kOk : kVerifyFailed;
}

int cmd_oracle_slope(const Config& c, std::ostream& out) {
  require_k(c.k);
  PerturbationFunction rho = c.rho_path.empty() ? verify::ball_breaking_perturbation(c.dim) : load_rho(c);
  const auto rep = dtn::slope_study(rho, c.k, c.eps, c.band_limit, c.quad_degree);
  json j = io::to_json(rep);
  j["config"] = config_json(c);
  emit(c, j.dump(2) + "\n", out);
  return kOk;
}

int cmd_diagnose_p2k(const Config& c, std::ostream& out) {
  require_k(c.k);
  if (c.xi_max < 1) throw DomainError("--xi-max must be >= 1");
  const int d = c.dim;
  const int k = c.k;
  const HarmonicIndex m{d, k, std::vector<int>(static_cast<std::size_t>(d - 1), k)};
  json entries = json::array();
  for (int xi = 1; xi <= c.xi_max; ++xi) {
    const int p = 2 * k + 2 * xi;
    HarmonicIndex q{d, p, std::vector<int>(static_cast<std::size_t>(d - 1), 2 * k)};
    q.m[0] = 0;
    const Complex w = perturbation::triple_integral_closed(TripleTower::build(q, m, m));
    const double weight = -0.5 * (p * (p + d - 1.0) + 2.0 * k);
    json e{{"xi", xi},
           {"p", p},
           {"q", q.m},
           {"W_closed", {no_negative_zero(w.real()), no_negative_zero(w.imag())}},
           {"M_entry", {no_negative_zero(weight * w.real()), no_negative_zero(weight * w.imag())}}};
    if (c.route == "quadrature" || c.route == "both") {
      const quadrature::SphereGrid grid(d, std::max(c.quad_degree, 2 * k + p), node_cap(c));
      const Complex wq = perturbation::triple_integral_quadrature(grid, q, m, m);
      e["W_quadrature"] = {no_negative_zero(wq.real()), no_negative_zero(wq.imag())};
    }
    entries.push_back(e);
  }
  json j{{"d", d}, {"k", k}, {"m", m.m}, {"entries", entries}, {"config", config_json(c)}};
  emit(c, j.dump(2) + "\n", out);
  return kOk;
}

void add_common(CLI::App* sub, Config& c, bool needs_k) {
  sub->add_option("--dim", c.dim, "Sphere dimension d (>= 3)")->check(CLI::Range(3, 64));
  if (needs_k) sub->add_option("--k", c.k, "Unperturbed eigenvalue / harmonic degree k (>= 1)");
  sub->add_option("--rho", c.rho_path, "Perturbation JSON file");
  sub->add_option("--quad-degree", c.quad_degree, "Quadrature exactness degree override");
  sub->add_option("--tol", c.tol, "Tolerance override");
  sub->add_option("--out", c.out_path, "Write output to this path instead of stdout");
  sub->add_option("--node-cap", c.node_cap, "Quadrature node cap (default from STEKLOV_NODE_CAP or 1e8)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"First-order Steklov eigenvalue expansions on nearly hyperspherical domains"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "First-order eigenvalues of M^(d,k) as JSON");
  add_common(spectrum, c, true);
  auto* matrix = app.add_subcommand("matrix", "The perturbation matrix M^(d,k) as JSON");
  add_common(matrix, c, true);
  auto* table = app.add_subcommand("table", "CSV of normalized first-order coefficients");
  add_common(table, c, true);
  table->add_option("--kmax", c.kmax, "Emit k = 1..kmax");
  for (auto* sub : {spectrum, matrix, table})
    sub->add_option("--route", c.route, "Assembly route")
        ->check(CLI::IsMember({"wigner", "quadrature", "both"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run a named invariant suite");
  add_common(verify_cmd, c, false);
  verify_cmd->add_option("--kmax", c.kmax, "Largest k (or degree) checked");
  verify_cmd->add_option("--suite", c.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(verify::suite_names()));

  auto* oracle = app.add_subcommand("oracle-slope", "Direct DtN solve: central-difference slopes vs M^(d,k)");
  add_common(oracle, c, true);
  oracle->add_option("--eps", c.eps, "Perturbation sizes (decreasing)")->delimiter(',');
  oracle->add_option("--L", c.band_limit, "Galerkin band limit (default k + band + 2)");

  auto* diag = app.add_subcommand("diagnose-p2k", "Entries for p = 2k + 2 xi, q = (0, 2k, ..., 2k), m = n = (k, ..., k)");
  add_common(diag, c, true);
  diag->add_option("--xi-max", c.xi_max, "Largest xi");
  diag->add_option("--route", c.route, "Also evaluate by quadrature with 'quadrature' or 'both'")
      ->check(CLI::IsMember({"wigner", "quadrature", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (spectrum->parsed()) {
      c.command = "spectrum";
      return cmd_spectrum(c, out);
    }
    if (matrix->parsed()) {
      c.command = "matrix";
      return cmd_matrix(c, out);
    }
    if (table->parsed()) {
      c.command = "table";
      return cmd_table(c, out);
    }
    if (verify_cmd->parsed()) {
      c.command = "verify";
      return cmd_verify(c, out);
    }
    if (oracle->parsed()) {
      c.command = "oracle-slope";
      return cmd_oracle_slope(c, out);
    }
    c.command = "diagnose-p2k";
    return cmd_diagnose_p2k(c, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  }
}

}  // namespace steklov::cli

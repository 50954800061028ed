#include "ddlpb/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "ddlpb/ball_analytic.hpp"
#include "ddlpb/coupling.hpp"
#include "ddlpb/error.hpp"

namespace ddlpb::cli {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string pqr;
  std::string out;
  std::string format = "csv";
  std::string g0 = "zero";
  std::string alpha_grid = "0.1:0.1:2.0";
  double eps1 = 1.0;
  double eps2 = 78.54;
  double kappa = 0.104;
  int lmax = 7;
  int leb = 86;
  double alpha = 1.0;
  double tol = 1e-4;
  int kmax = 60;
  double radius = 1.0;
  int threads = 0;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ordered_json json_num(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

coupling::SolverConfig make_config(const Options& o) {
  coupling::SolverConfig c;
  c.params = {o.eps1, o.eps2, o.kappa};
  c.lmax = o.lmax;
  c.leb_order = o.leb;
  c.alpha = o.alpha;
  c.tol = o.tol;
  c.kmax = o.kmax;
  c.g0 = coupling::initial_guess_from_string(o.g0);
  c.validate();
  return c;
}

ordered_json config_json(const std::string& command, const Options& o) {
  ordered_json j;
  j["command"] = command;
  if (command == "spectrum") {
    j["radius"] = o.radius;
  } else {
    j["pqr"] = o.pqr;
  }
  j["eps1"] = o.eps1;
  j["eps2"] = o.eps2;
  j["kappa"] = o.kappa;
  j["lmax"] = o.lmax;
  if (command != "spectrum") {
    j["leb"] = o.leb;
    if (command == "solve") {
      j["alpha"] = o.alpha;
    } else {
      j["alpha_grid"] = o.alpha_grid;
    }
    j["tol"] = o.tol;
    j["kmax"] = o.kmax;
    j["g0"] = o.g0;
  }
  return j;
}

std::string header_line(const ordered_json& cfg) {
  std::string s = std::string("# ") + kReportFormat;
  for (const auto& [key, value] : cfg.items()) {
    s += " " + key + "=";
    if (value.is_string()) {
      s += value.get<std::string>();
    } else if (value.is_number_float()) {
      s += num(value.get<double>());
    } else {
      s += value.dump();
    }
  }
  return s + "\n";
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot open output file " + o.out);
  f << text;
  if (!f) throw Error("failed writing output file " + o.out);
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cfg = make_config(o);
  const auto atoms = cavity::read_pqr(o.pqr);
  const auto config = config_json("solve", o);
  coupling::IterationReport rep;
  std::string divergence;
  try {
    rep = coupling::richardson_run(atoms, cfg);
  } catch (const DivergenceError& e) {
    divergence = e.what();
    rep.n_ite = e.iteration();
  }

  std::ostringstream s;
  if (o.format == "json") {
    ordered_json j;
    j["format"] = kReportFormat;
    j["config"] = config;
    ordered_json its = ordered_json::array();
    for (std::size_t k = 0; k < rep.energies_kjmol.size(); ++k) {
      its.push_back({{"k", k + 1}, {"energy_kjmol", rep.energies_kjmol[k]}, {"rel_error", json_num(rep.rel_errors[k])}});
    }
    j["iterations"] = its;
    j["converged"] = rep.converged;
    j["n_ite"] = rep.n_ite;
    j["energy_kjmol"] = json_num(divergence.empty() ? rep.final_energy() : NAN);
    j["wall_seconds"] = rep.wall_seconds;
    if (!divergence.empty()) j["failure"] = divergence;
    s << j.dump(2) << "\n";
  } else {
    s << header_line(config);
    s << "k,energy_kjmol,rel_error\n";
    for (std::size_t k = 0; k < rep.energies_kjmol.size(); ++k) {
      s << k + 1 << "," << num(rep.energies_kjmol[k]) << "," << num(rep.rel_errors[k]) << "\n";
    }
    s << "# converged=" << (rep.converged ? 1 : 0) << " n_ite=" << rep.n_ite
      << " energy_kjmol=" << num(divergence.empty() ? rep.final_energy() : NAN) << "\n";
    if (!divergence.empty()) s << "# failure=" << divergence << "\n";
  }
  emit(o, s.str(), out);

  if (!divergence.empty()) {
    err << "ddlpb: " << divergence << "\n";
    return kExitNotConverged;
  }
  err << "ddlpb: " << (rep.converged ? "converged" : "not converged") << " after " << rep.n_ite
      << " iterations, E = " << num(rep.final_energy()) << " kJ/mol, wall " << num(rep.wall_seconds) << " s\n";
  return rep.converged ? kExitConverged : kExitNotConverged;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cfg = make_config(o);
  const auto alphas = parse_alpha_grid(o.alpha_grid);
  const auto atoms = cavity::read_pqr(o.pqr);
  const auto sweep = coupling::alpha_sweep(atoms, cfg, alphas);
  const double practical = analytic::practical_alpha(cfg.params);

  std::ostringstream s;
  if (o.format == "json") {
    ordered_json j;
    j["format"] = kReportFormat;
    j["config"] = config_json("sweep", o);
    ordered_json rows = ordered_json::array();
    for (const auto& r : sweep.rows) {
      ordered_json row = {{"alpha", r.alpha},
                          {"n_ite", r.n_ite},
                          {"converged", r.converged},
                          {"energy_kjmol", json_num(r.energy_kjmol)},
                          {"err_final", json_num(r.err_final)}};
      if (!r.failure.empty()) row["failure"] = r.failure;
      rows.push_back(row);
    }
    j["rows"] = rows;
    j["alpha_opt_empirical"] = sweep.has_optimum ? ordered_json(sweep.alpha_opt) : ordered_json(nullptr);
    j["practical_alpha"] = practical;
    s << j.dump(2) << "\n";
  } else {
    s << header_line(config_json("sweep", o));
    s << "alpha,n_ite,converged,energy_kjmol,err_final\n";
    for (const auto& r : sweep.rows) {
      s << num(r.alpha) << "," << r.n_ite << "," << (r.converged ? 1 : 0) << "," << num(r.energy_kjmol) << ","
        << num(r.err_final) << "\n";
    }
    s << "# alpha_opt_empirical=" << (sweep.has_optimum ? num(sweep.alpha_opt) : std::string("none"))
      << " practical_alpha=" << num(practical) << "\n";
  }
  emit(o, s.str(), out);

  for (const auto& r : sweep.rows) {
    if (!r.failure.empty()) err << "ddlpb: alpha=" << num(r.alpha) << ": " << r.failure << "\n";
  }
  return sweep.has_optimum ? kExitConverged : kExitNotConverged;
}

int cmd_spectrum(const Options& o, std::ostream& out, std::ostream&) {
  const analytic::PhysicalParams p{o.eps1, o.eps2, o.kappa};
  p.validate();
  if (o.lmax < 0) throw Error("lmax must be non-negative");
  const auto table = analytic::mode_spectrum(o.radius, p, o.lmax);
  const auto bounds = analytic::spectral_bounds(p, analytic::sobolev_ball_bound(o.radius));
  const double alpha_op = analytic::optimal_alpha(bounds.c1, bounds.c2);
  const double practical = analytic::practical_alpha(p);

  std::ostringstream s;
  if (o.format == "json") {
    ordered_json j;
    j["format"] = kReportFormat;
    j["config"] = config_json("spectrum", o);
    ordered_json modes = ordered_json::array();
    for (const auto& m : table.modes) {
      modes.push_back({{"ell", m.degree},
                       {"lambda_r", m.lambda_r},
                       {"lambda_c", m.lambda_c},
                       {"lambda_e", m.lambda_e},
                       {"mu", m.mu}});
    }
    j["modes"] = modes;
    j["C1"] = bounds.c1;
    j["C2"] = bounds.c2;
    j["mu_min"] = table.mu_min();
    j["mu_max"] = table.mu_max();
    j["alpha_op"] = alpha_op;
    j["practical_alpha"] = practical;
    s << j.dump(2) << "\n";
  } else {
    s << header_line(config_json("spectrum", o));
    s << "ell,lambda_r,lambda_c,lambda_e,mu\n";
    for (const auto& m : table.modes) {
      s << m.degree << "," << num(m.lambda_r) << "," << num(m.lambda_c) << "," << num(m.lambda_e) << ","
        << num(m.mu) << "\n";
    }
    s << "# C1=" << num(bounds.c1) << " C2=" << num(bounds.c2) << " mu_min=" << num(table.mu_min())
      << " mu_max=" << num(table.mu_max()) << " alpha_op=" << num(alpha_op) << " practical_alpha=" << num(practical)
      << "\n";
  }
  emit(o, s.str(), out);
  return kExitConverged;
}

}  // namespace

std::vector<double> parse_alpha_grid(const std::string& text) {
  auto to_double = [&](const std::string& t) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) throw Error("invalid number '" + t + "' in alpha grid '" + text + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string t; std::getline(ss, t, ':');) parts.push_back(t);
    if (parts.size() != 3) throw Error("alpha grid '" + text + "' must be start:step:stop");
    const double start = to_double(parts[0]), step = to_double(parts[1]), stop = to_double(parts[2]);
    if (!(step > 0.0) || stop < start) throw Error("alpha grid '" + text + "' needs step > 0 and stop >= start");
    const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; ++i) {
      // Grid values are rounded to 12 significant digits.
      out.push_back(std::stod(num(start + static_cast<double>(i) * step)));
    }
  } else {
    std::stringstream ss(text);
    for (std::string t; std::getline(ss, t, ',');) out.push_back(to_double(t));
  }
  if (out.empty()) throw Error("alpha grid is empty");
  for (double a : out) {
    if (!(a > 0.0)) throw Error("alpha values must be positive");
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linearized Poisson-Boltzmann solvation energies by the ddLPB interface iteration", "ddlpb"};
  app.require_subcommand(1);
  Options o;

  auto add_physics = [&](CLI::App* c) {
    c->add_option("--eps1", o.eps1, "Solute dielectric constant")->capture_default_str();
    c->add_option("--eps2", o.eps2, "Solvent dielectric constant")->capture_default_str();
    c->add_option("--kappa", o.kappa, "Debye-Hueckel screening constant [1/Angstrom]")->capture_default_str();
    c->add_option("--lmax", o.lmax, "Maximal spherical-harmonic degree")->capture_default_str();
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    c->add_option("--out", o.out, "Output file (default: standard output)");
    c->add_option("--threads", o.threads, "Maximal number of worker threads (0: runtime default)")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_solver = [&](CLI::App* c) {
    add_physics(c);
    c->add_option("pqr", o.pqr, "PQR file describing the solute")->required();
    c->add_option("--leb", o.leb, "Lebedev points per sphere")->capture_default_str();
    c->add_option("--tol", o.tol, "Relative energy tolerance")->capture_default_str();
    c->add_option("--kmax", o.kmax, "Maximal number of outer iterations")->capture_default_str();
    c->add_option("--g0", o.g0, "Initial boundary datum")->check(CLI::IsMember({"zero", "psi0"}))->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "Run the interface iteration for one stepping parameter");
  add_solver(solve);
  solve->add_option("--alpha", o.alpha, "Stepping parameter")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Run the interface iteration over a grid of stepping parameters");
  add_solver(sweep);
  sweep->add_option("--alpha-grid", o.alpha_grid, "start:step:stop or comma-separated list")->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Per-mode operator spectrum of a single ball");
  add_physics(spectrum);
  spectrum->add_option("--radius", o.radius, "Ball radius [Angstrom]")->capture_default_str();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("ddlpb");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (o.threads > 0) omp_set_num_threads(o.threads);
    if (*solve) return cmd_solve(o, out, err);
    if (*sweep) return cmd_sweep(o, out, err);
    return cmd_spectrum(o, out, err);
  } catch (const std::exception& e) {
    err << "ddlpb: error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace ddlpb::cli

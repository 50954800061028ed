#include "ddlpb/coupling.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include "ddlpb/error.hpp"
#include "ddlpb/specfun.hpp"

namespace ddlpb::coupling {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kChargeExclusion = 1e-12;
constexpr double kDivergenceEnergy = 1e12;

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

void check_target(const cavity::Atom& a, const Vec3& x, double d) {
  if (d < kChargeExclusion) {
    throw Error("psi0: target point (" + std::to_string(x[0]) + ", " + std::to_string(x[1]) + ", " +
                std::to_string(x[2]) + ") coincides with a charged atom at (" + std::to_string(a.center[0]) + ", " +
                std::to_string(a.center[1]) + ", " + std::to_string(a.center[2]) + ")");
  }
}

double relative_change(double current, double previous) {
  const double diff = std::abs(current - previous);
  if (previous == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / std::abs(previous);
}

}  // namespace

std::vector<double> psi0_eval(std::span<const cavity::Atom> atoms, std::span<const Vec3> points, double eps1) {
  if (!(eps1 > 0.0)) throw Error("psi0_eval: eps1 must be positive");
  std::vector<double> out(points.size(), 0.0);
  for (std::size_t p = 0; p < points.size(); ++p) {
    double v = 0.0;
    for (const auto& a : atoms) {
      if (a.charge == 0.0) continue;
      const double d = distance(points[p], a.center);
      check_target(a, points[p], d);
      v += a.charge / d;
    }
    out[p] = v / eps1;
  }
  return out;
}

std::vector<Vec3> psi0_gradient(std::span<const cavity::Atom> atoms, std::span<const Vec3> points, double eps1) {
  if (!(eps1 > 0.0)) throw Error("psi0_gradient: eps1 must be positive");
  std::vector<Vec3> out(points.size(), Vec3{0.0, 0.0, 0.0});
  for (std::size_t p = 0; p < points.size(); ++p) {
    Vec3 g{0.0, 0.0, 0.0};
    for (const auto& a : atoms) {
      if (a.charge == 0.0) continue;
      const Vec3 r = points[p] - a.center;
      const double d = norm(r);
      check_target(a, points[p], d);
      g = g + (-a.charge / (d * d * d)) * r;
    }
    out[p] = (1.0 / eps1) * g;
  }
  return out;
}

SingleLayer::SingleLayer(const cavity::SurfaceGrid& surface, double kappa, int lmax, kernels::Exec exec)
    : surface_(&surface), kappa_(kappa), lmax_(lmax), exec_(exec), tables_(surface, lmax) {
  if (!(kappa > 0.0)) throw Error("SingleLayer: kappa must be positive");
  interior::check_discretization(surface, lmax);
  const int nballs = surface.num_balls();
  eig_.resize(sz(nballs) * sz(lmax + 1));
  for (int j = 0; j < nballs; ++j) {
    for (int l = 0; l <= lmax; ++l) {
      eig_[sz(j) * sz(lmax + 1) + sz(l)] = analytic::single_layer_eig(l, surface.atoms[sz(j)].radius, kappa);
    }
  }
  for (int j = 0; j < nballs; ++j) {
    const double r2 = surface.atoms[sz(j)].radius * surface.atoms[sz(j)].radius;
    for (int n = 0; n < surface.points_per_ball(); ++n) {
      const auto idx = surface.flat(j, n);
      if (!surface.exposed[idx]) continue;
      src_pos_.push_back(surface.positions[idx]);
      src_owner_.push_back(j);
      src_flat_.push_back(idx);
      src_scale_.push_back(surface.weights[sz(n)] * r2);
      src_width_.push_back(2.0 * surface.atoms[sz(j)].radius * std::sqrt(surface.weights[sz(n)]));
    }
  }
  exposed_targets_ = make_targets([](const cavity::SurfaceGrid& s, std::size_t idx) { return s.exposed[idx] != 0; });
  all_targets_ = make_targets([](const cavity::SurfaceGrid&, std::size_t) { return true; });
}

SingleLayer::TargetSet SingleLayer::make_targets(bool (*keep)(const cavity::SurfaceGrid&, std::size_t)) const {
  TargetSet t;
  const auto& s = *surface_;
  for (std::size_t idx = 0; idx < s.positions.size(); ++idx) {
    if (!keep(s, idx)) continue;
    t.flat.push_back(idx);
    t.positions.push_back(s.positions[idx]);
    t.owner.push_back(static_cast<int>(idx / s.directions.size()));
  }
  return t;
}

void SingleLayer::values_at(std::span<const double> sigma, const TargetSet& targets, std::span<double> out) const {
  const auto& s = *surface_;
  if (sigma.size() != s.positions.size()) throw Error("SingleLayer: density size mismatch");
  const int npts = s.points_per_ball();
  const int nb = tables_.nbasis;

  // Spectral self part: coefficients of the owning sphere's density, scaled.
  std::vector<double> self(sz(s.num_balls()) * sz(nb), 0.0);
  std::vector<double> masked(sz(npts));
  for (int j = 0; j < s.num_balls(); ++j) {
    if (s.exposed_count(j) == 0) continue;
    for (int n = 0; n < npts; ++n) {
      const auto idx = s.flat(j, n);
      masked[sz(n)] = s.exposed[idx] ? sigma[idx] : 0.0;
    }
    auto c = std::span<double>(self).subspan(sz(j) * sz(nb), sz(nb));
    tables_.project(masked, c);
    for (int l = 0; l <= lmax_; ++l) {
      const double e = eig_[sz(j) * sz(lmax_ + 1) + sz(l)];
      for (int m = -l; m <= l; ++m) c[sz(l * l + l + m)] *= e;
    }
  }

  std::vector<double> q(src_flat_.size());
  for (std::size_t k = 0; k < q.size(); ++k) q[k] = src_scale_[k] * sigma[src_flat_[k]];
  kernels::yukawa_cross(src_pos_, src_owner_, q, src_width_, targets.positions, targets.owner, kappa_, out, exec_);

  for (std::size_t t = 0; t < targets.flat.size(); ++t) {
    const int j = targets.owner[t];
    const int n = static_cast<int>(targets.flat[t] - s.flat(j, 0));
    out[t] += tables_.evaluate(std::span<const double>(self).subspan(sz(j) * sz(nb), sz(nb)), n);
  }
}

std::vector<double> SingleLayer::apply(std::span<const double> sigma, Targets targets) const {
  const TargetSet& t = targets == Targets::exposed ? exposed_targets_ : all_targets_;
  std::vector<double> vals(t.flat.size());
  values_at(sigma, t, vals);
  std::vector<double> out(surface_->positions.size(), 0.0);
  for (std::size_t k = 0; k < t.flat.size(); ++k) out[t.flat[k]] = vals[k];
  return out;
}

std::vector<double> SingleLayer::apply_coefficients(std::span<const double> sigma) const {
  const auto& s = *surface_;
  std::vector<double> vals(exposed_targets_.flat.size());
  values_at(sigma, exposed_targets_, vals);
  const int npts = s.points_per_ball();
  const int nb = tables_.nbasis;
  std::vector<double> coeffs(sz(s.num_balls()) * sz(nb), 0.0);
  std::vector<double> masked(sz(npts));
  std::size_t t = 0;
  for (int j = 0; j < s.num_balls(); ++j) {
    if (s.exposed_count(j) == 0) continue;
    std::fill(masked.begin(), masked.end(), 0.0);
    for (; t < vals.size() && exposed_targets_.owner[t] == j; ++t) {
      masked[exposed_targets_.flat[t] - s.flat(j, 0)] = vals[t];
    }
    tables_.project(masked, std::span<double>(coeffs).subspan(sz(j) * sz(nb), sz(nb)));
  }
  return coeffs;
}

std::vector<double> apply_single_layer(const cavity::SurfaceGrid& surface, std::span<const double> sigma,
                                       double kappa, int lmax, Targets targets) {
  return SingleLayer(surface, kappa, lmax).apply(sigma, targets);
}

std::string to_string(InitialGuess g) { return g == InitialGuess::zero ? "zero" : "psi0"; }

InitialGuess initial_guess_from_string(const std::string& s) {
  if (s == "zero") return InitialGuess::zero;
  if (s == "psi0") return InitialGuess::psi0;
  throw Error("unknown initial guess '" + s + "' (expected zero or psi0)");
}

void SolverConfig::validate() const {
  params.validate();
  if (lmax < 0) throw Error("lmax must be non-negative");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error("alpha must be positive");
  if (!(tol > 0.0)) throw Error("tol must be positive");
  if (kmax < 1) throw Error("kmax must be at least 1");
  if (!(inner_tol > 0.0)) throw Error("inner tolerance must be positive");
  if (!(delta >= 0.0)) throw Error("delta must be non-negative");
  const int precision = specfun::lebedev_precision(leb_order);
  if (precision < 2 * lmax) {
    throw Error("Lebedev order " + std::to_string(leb_order) + " (precision " + std::to_string(precision) +
                ") cannot resolve lmax=" + std::to_string(lmax) + "; need precision >= 2*lmax");
  }
}

DdlpbSolver::DdlpbSolver(std::span<const cavity::Atom> atoms, const SolverConfig& config) : config_(config) {
  config_.validate();
  surface_ = std::make_unique<cavity::SurfaceGrid>(cavity::build_surface(atoms, config_.leb_order, config_.delta));
  interior::SolveOptions opts;
  opts.rel_tol = config_.inner_tol;
  opts.exec = config_.exec;
  laplace_ = std::make_unique<interior::InteriorSolver>(*surface_, config_.lmax, interior::Kind::laplace, 0.0, opts);
  hsp_ = std::make_unique<interior::InteriorSolver>(*surface_, config_.lmax, interior::Kind::hsp,
                                                    config_.params.kappa, opts);
  single_layer_ = std::make_unique<SingleLayer>(*surface_, config_.params.kappa, config_.lmax, config_.exec);

  const auto& s = *surface_;
  std::vector<Vec3> pts;
  std::vector<std::size_t> flat;
  for (std::size_t idx = 0; idx < s.positions.size(); ++idx) {
    if (!s.exposed[idx]) continue;
    pts.push_back(s.positions[idx]);
    flat.push_back(idx);
  }
  const auto v = psi0_eval(s.atoms, pts, config_.params.eps1);
  const auto g = psi0_gradient(s.atoms, pts, config_.params.eps1);
  std::vector<double> psi0(s.positions.size(), 0.0);
  dn_psi0_.assign(s.positions.size(), 0.0);
  for (std::size_t k = 0; k < flat.size(); ++k) {
    psi0[flat[k]] = v[k];
    dn_psi0_[flat[k]] = dot(g[k], s.directions[flat[k] % s.directions.size()]);
  }
  psi0_datum_ = interior::BoundaryDatum::from_values(s, config_.lmax, psi0);
}

interior::BoundaryDatum DdlpbSolver::initial_datum(InitialGuess kind) const {
  if (kind == InitialGuess::psi0) return psi0_datum_;
  return interior::BoundaryDatum::zeros(surface_->num_balls(), config_.lmax);
}

StepResult DdlpbSolver::step_impl(const interior::BoundaryDatum& g, double alpha,
                                  const interior::BallExpansion* warm_r, const interior::BallExpansion* warm_e,
                                  bool need_update) const {
  const auto& s = *surface_;
  if (g.lmax != config_.lmax || g.num_balls() != s.num_balls()) throw Error("boundary datum does not match cavity");
  const auto& tables = laplace_->tables();
  const std::size_t total = s.positions.size();

  std::vector<double> rhs_r(g.coeffs.size());
  for (std::size_t k = 0; k < rhs_r.size(); ++k) rhs_r[k] = g.coeffs[k] - psi0_datum_.coeffs[k];

  StepResult r;
  r.reaction = laplace_->solve_rhs(rhs_r, warm_r);
  r.screened = hsp_->solve_rhs(g.coeffs, warm_e);
  r.energy = solvation_energy(r.reaction, s.atoms);
  if (!need_update) return r;

  const auto dn_r = interior::neumann_trace(r.reaction, s, tables);
  const auto dn_e = interior::neumann_trace(r.screened, s, tables);
  const double ratio = config_.params.eps1 / config_.params.eps2;
  std::vector<double> sigma(total, 0.0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (s.exposed[idx]) sigma[idx] = dn_e[idx] - ratio * (dn_psi0_[idx] + dn_r[idx]);
  }
  const auto gs = single_layer_->apply_coefficients(sigma);

  r.next.lmax = g.lmax;
  r.next.coeffs.resize(g.coeffs.size());
  for (std::size_t k = 0; k < gs.size(); ++k) r.next.coeffs[k] = (1.0 - alpha) * g.coeffs[k] + alpha * gs[k];
  return r;
}

interior::BoundaryDatum DdlpbSolver::interface_map(const interior::BoundaryDatum& g) const {
  return step_impl(g, 1.0, nullptr, nullptr, true).next;
}

StepResult DdlpbSolver::step(const interior::BoundaryDatum& g, double alpha) const {
  return step_impl(g, alpha, nullptr, nullptr, true);
}

IterationReport DdlpbSolver::run() const { return run(initial_datum(config_.g0), config_.alpha); }

IterationReport DdlpbSolver::run(double alpha) const { return run(initial_datum(config_.g0), alpha); }

IterationReport DdlpbSolver::run(const interior::BoundaryDatum& g0, double alpha) const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw Error("alpha must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  IterationReport rep;
  rep.alpha = alpha;
  interior::BoundaryDatum g = g0;
  if (config_.keep_history) rep.history.push_back(g);

  interior::BallExpansion warm_r, warm_e;
  for (int k = 1; k <= config_.kmax; ++k) {
    StepResult res = step_impl(g, alpha, k > 1 ? &warm_r : nullptr, k > 1 ? &warm_e : nullptr, true);
    const double e = res.energy * kCoulombKjMol;
    if (!std::isfinite(e) || std::abs(e) > kDivergenceEnergy) {
      throw DivergenceError("diverged at iteration " + std::to_string(k) + " (energy " + std::to_string(e) + ")",
                            k);
    }
    rep.energies_kjmol.push_back(e);
    rep.rel_errors.push_back(k == 1 ? std::numeric_limits<double>::quiet_NaN()
                                    : relative_change(e, rep.energies_kjmol[sz(k) - 2]));
    g = std::move(res.next);
    warm_r = std::move(res.reaction);
    warm_e = std::move(res.screened);
    if (config_.keep_history) rep.history.push_back(g);
    rep.n_ite = k;
    if (k >= 2 && rep.rel_errors.back() < config_.tol) {
      rep.converged = true;
      break;
    }
  }
  rep.final_datum = std::move(g);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

double solvation_energy(const interior::BallExpansion& reaction, std::span<const cavity::Atom> atoms) {
  if (reaction.num_balls() != static_cast<int>(atoms.size())) throw Error("solvation_energy: ball count mismatch");
  const double y00 = 1.0 / std::sqrt(kFourPi);
  double e = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].charge == 0.0) continue;
    e += atoms[i].charge * reaction.ball(static_cast<int>(i))[0] * y00;
  }
  return 0.5 * e;
}

IterationReport richardson_run(std::span<const cavity::Atom> atoms, const SolverConfig& config) {
  return DdlpbSolver(atoms, config).run();
}

IterationReport richardson_run(std::span<const cavity::Atom> atoms, const SolverConfig& config,
                               const interior::BoundaryDatum& g0) {
  return DdlpbSolver(atoms, config).run(g0, config.alpha);
}

SweepResult alpha_sweep(std::span<const cavity::Atom> atoms, const SolverConfig& config,
                        std::span<const double> alphas) {
  if (alphas.empty()) throw Error("alpha_sweep: empty alpha list");
  for (double a : alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) throw Error("alpha_sweep: alpha values must be positive");
  }
  SolverConfig cfg = config;
  cfg.keep_history = false;
  const DdlpbSolver solver(atoms, cfg);
  const auto g0 = solver.initial_datum(cfg.g0);

  SweepResult out;
  out.rows.resize(alphas.size());
  const int n = static_cast<int>(alphas.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    SweepRow& row = out.rows[sz(i)];
    row.alpha = alphas[sz(i)];
    try {
      const auto rep = solver.run(g0, row.alpha);
      row.n_ite = rep.n_ite;
      row.converged = rep.converged;
      row.energy_kjmol = rep.final_energy();
      row.err_final = rep.final_error();
    } catch (const DivergenceError& e) {
      row.n_ite = e.iteration();
      row.converged = false;
      row.energy_kjmol = std::numeric_limits<double>::quiet_NaN();
      row.err_final = std::numeric_limits<double>::infinity();
      row.failure = e.what();
    } catch (const std::exception& e) {
      row.converged = false;
      row.energy_kjmol = std::numeric_limits<double>::quiet_NaN();
      row.err_final = std::numeric_limits<double>::quiet_NaN();
      row.failure = e.what();
    }
  }

  int best = 0;
  for (const auto& row : out.rows) {
    if (!row.converged) continue;
    const bool better = !out.has_optimum || row.n_ite < best || (row.n_ite == best && row.alpha < out.alpha_opt);
    if (better) {
      out.has_optimum = true;
      best = row.n_ite;
      out.alpha_opt = row.alpha;
    }
  }
  return out;
}

}  // namespace ddlpb::coupling

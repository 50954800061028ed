#include "ddlpb/interior.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ddlpb/error.hpp"
#include "ddlpb/gmres.hpp"
#include "ddlpb/specfun.hpp"

namespace ddlpb::interior {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

// Basis values of one ball at an arbitrary point inside it.
void basis_at(Kind kind, int lmax, double kappa, const cavity::Atom& ball, const Vec3& x, std::span<double> out,
              std::vector<double>& radial, std::vector<double>& ylm) {
  const Vec3 d = x - ball.center;
  const double r = norm(d);
  radial_factors(kind, lmax, kappa, ball.radius, r, radial);
  if (r == 0.0) {
    std::fill(out.begin(), out.end(), 0.0);
    out[0] = radial[0] * std::sqrt(1.0 / kFourPi);
    return;
  }
  specfun::real_sph_harm_all(lmax, (1.0 / r) * d, ylm);
  for (int l = 0; l <= lmax; ++l) {
    for (int m = -l; m <= l; ++m) {
      const auto k = sz(l * l + l + m);
      out[k] = radial[sz(l)] * ylm[k];
    }
  }
}

}  // namespace

BoundaryDatum BoundaryDatum::zeros(int num_balls, int lmax) {
  BoundaryDatum g;
  g.lmax = lmax;
  g.coeffs.assign(sz(num_balls) * sz(specfun::harmonic_count(lmax)), 0.0);
  return g;
}

double BoundaryDatum::value_at(const cavity::SurfaceGrid& surface, int ball, int point) const {
  std::vector<double> y(sz(nbasis()));
  specfun::real_sph_harm_all(lmax, surface.directions[sz(point)], y);
  const auto c = this->ball(ball);
  double v = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) v += c[k] * y[k];
  return v;
}

BoundaryDatum BoundaryDatum::from_values(const cavity::SurfaceGrid& surface, int lmax,
                                         std::span<const double> values) {
  if (values.size() != surface.positions.size()) throw Error("BoundaryDatum: value count mismatch");
  const HarmonicTables tables(surface, lmax);
  auto g = zeros(surface.num_balls(), lmax);
  std::vector<double> masked(sz(surface.points_per_ball()));
  for (int j = 0; j < surface.num_balls(); ++j) {
    for (int n = 0; n < surface.points_per_ball(); ++n) {
      const auto idx = surface.flat(j, n);
      masked[sz(n)] = surface.exposed[idx] ? values[idx] : 0.0;
    }
    tables.project(masked, g.ball(j));
  }
  return g;
}

HarmonicTables::HarmonicTables(const cavity::SurfaceGrid& surface, int lmax_)
    : lmax(lmax_), nbasis(specfun::harmonic_count(lmax_)), npts(surface.points_per_ball()) {
  values.resize(sz(npts) * sz(nbasis));
  projector.resize(values.size());
  for (int n = 0; n < npts; ++n) {
    auto row = std::span<double>(values).subspan(sz(n) * sz(nbasis), sz(nbasis));
    specfun::real_sph_harm_all(lmax, surface.directions[sz(n)], row);
    for (int k = 0; k < nbasis; ++k) {
      projector[sz(n) * sz(nbasis) + sz(k)] = kFourPi * surface.weights[sz(n)] * row[sz(k)];
    }
  }
}

void HarmonicTables::project(std::span<const double> point_values, std::span<double> coeffs) const {
  std::fill(coeffs.begin(), coeffs.end(), 0.0);
  for (int n = 0; n < npts; ++n) {
    const double f = point_values[sz(n)];
    if (f == 0.0) continue;
    const double* p = projector.data() + sz(n) * sz(nbasis);
    for (int k = 0; k < nbasis; ++k) coeffs[sz(k)] += f * p[k];
  }
}

double HarmonicTables::evaluate(std::span<const double> coeffs, int point) const {
  const double* y = values.data() + sz(point) * sz(nbasis);
  double v = 0.0;
  for (int k = 0; k < nbasis; ++k) v += coeffs[sz(k)] * y[k];
  return v;
}

void check_discretization(const cavity::SurfaceGrid& surface, int lmax) {
  if (lmax < 0) throw Error("lmax must be non-negative");
  if (surface.leb_precision < 2 * lmax) {
    throw Error("Lebedev order " + std::to_string(surface.leb_order) + " (precision " +
                std::to_string(surface.leb_precision) + ") cannot resolve lmax=" + std::to_string(lmax) +
                "; need precision >= 2*lmax");
  }
}

void radial_factors(Kind kind, int lmax, double kappa, double radius, double r, std::span<double> out) {
  if (r > radius * (1.0 + 1e-12)) throw Error("radial_factors: point outside ball");
  const double t = std::min(r / radius, 1.0);
  if (kind == Kind::laplace) {
    double p = 1.0;
    for (int l = 0; l <= lmax; ++l) {
      out[sz(l)] = p;
      p *= t;
    }
    return;
  }
  for (int l = 0; l <= lmax; ++l) {
    out[sz(l)] = specfun::bessel_i_quotient(l, kappa * t * radius, kappa * radius);
  }
}

InteriorSolver::InteriorSolver(const cavity::SurfaceGrid& surface, int lmax, Kind kind, double kappa,
                               SolveOptions opts)
    : surface_(&surface), lmax_(lmax), kind_(kind), kappa_(kappa), opts_(opts), tables_(surface, lmax) {
  check_discretization(surface, lmax);
  if (kind == Kind::hsp && !(kappa > 0.0)) throw Error("InteriorSolver: HSP kind needs kappa > 0");

  const int nballs = surface.num_balls();
  const int npts = surface.points_per_ball();
  rows_.nbasis = tables_.nbasis;
  rows_.ball_offset.assign(sz(nballs) + 1, 0);
  for (int j = 0; j < nballs; ++j) {
    std::size_t buried = 0;
    for (int n = 0; n < npts; ++n) buried += surface.exposed[surface.flat(j, n)] ? 0 : 1;
    rows_.ball_offset[sz(j) + 1] = rows_.ball_offset[sz(j)] + buried;
  }
  const std::size_t entries = rows_.ball_offset.back();
  rows_.point.resize(entries);
  rows_.source.resize(entries);
  rows_.basis.resize(entries * sz(rows_.nbasis));

#pragma omp parallel
  {
    std::vector<double> radial(sz(lmax) + 1), ylm(sz(rows_.nbasis));
#pragma omp for schedule(dynamic, 4)
    for (int j = 0; j < nballs; ++j) {
      std::size_t e = rows_.ball_offset[sz(j)];
      for (int n = 0; n < npts; ++n) {
        const std::size_t idx = surface.flat(j, n);
        if (surface.exposed[idx]) continue;
        const int src = surface.container[idx];
        rows_.point[e] = n;
        rows_.source[e] = src;
        auto row = std::span<double>(rows_.basis).subspan(e * sz(rows_.nbasis), sz(rows_.nbasis));
        basis_at(kind_, lmax_, kappa_, surface.atoms[sz(src)], surface.positions[idx], row, radial, ylm);
        ++e;
      }
    }
  }
}

void InteriorSolver::apply_coupling(std::span<const double> x, std::span<double> y) const {
  kernels::schwarz_apply(rows_, tables_.projector, x, y, opts_.exec);
}

std::vector<double> InteriorSolver::rhs(std::span<const double> dirichlet) const {
  const auto& s = *surface_;
  if (dirichlet.size() != s.positions.size()) throw Error("InteriorSolver: Dirichlet data size mismatch");
  const int npts = s.points_per_ball();
  std::vector<double> b(sz(s.num_balls()) * sz(tables_.nbasis));
  std::vector<double> masked(sz(npts));
  for (int j = 0; j < s.num_balls(); ++j) {
    for (int n = 0; n < npts; ++n) {
      const auto idx = s.flat(j, n);
      masked[sz(n)] = s.exposed[idx] ? dirichlet[idx] : 0.0;
    }
    tables_.project(masked, std::span<double>(b).subspan(sz(j) * sz(tables_.nbasis), sz(tables_.nbasis)));
  }
  return b;
}

BallExpansion InteriorSolver::solve(std::span<const double> dirichlet, const BallExpansion* warm_start,
                                    SolveStats* stats) const {
  return solve_rhs(rhs(dirichlet), warm_start, stats);
}

BallExpansion InteriorSolver::solve(const BoundaryDatum& dirichlet, const BallExpansion* warm_start,
                                    SolveStats* stats) const {
  if (dirichlet.lmax != lmax_) throw Error("InteriorSolver: datum lmax does not match solver");
  if (dirichlet.num_balls() != surface_->num_balls()) throw Error("InteriorSolver: datum ball count mismatch");
  return solve_rhs(dirichlet.coeffs, warm_start, stats);
}

BallExpansion InteriorSolver::solve_rhs(std::span<const double> b, const BallExpansion* warm_start,
                                        SolveStats* stats) const {
  if (b.size() != sz(surface_->num_balls()) * sz(tables_.nbasis)) throw Error("InteriorSolver: rhs size mismatch");
  BallExpansion out;
  out.kind = kind_;
  out.lmax = lmax_;
  out.kappa = kappa_;
  if (warm_start && warm_start->coeffs.size() == b.size()) {
    out.coeffs = warm_start->coeffs;
  } else {
    out.coeffs.assign(b.begin(), b.end());
  }

  SolveStats local;
  if (rows_.basis.empty()) {
    // No buried points: balls are uncoupled and b is the solution.
    out.coeffs.assign(b.begin(), b.end());
  } else {
    auto op = [this](std::span<const double> x, std::span<double> y) {
      apply_coupling(x, y);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] - y[i];
    };
    linalg::GmresOptions go;
    go.restart = opts_.restart;
    go.max_iter = opts_.max_iter;
    go.rel_tol = opts_.rel_tol;
    const auto res = linalg::gmres(op, b, out.coeffs, go);
    local.iterations = res.iterations;
    local.rel_residual = res.rel_residual;
    if (!res.converged) {
      // Fixed-point sweeps x <- K x + b.
      local.used_fallback = true;
      std::vector<double> kx(b.size()), r(b.size());
      double bn = 0.0;
      for (double v : b) bn += v * v;
      bn = std::sqrt(bn);
      for (int it = 0; it < opts_.max_iter; ++it) {
        apply_coupling(out.coeffs, kx);
        double rn = 0.0;
        for (std::size_t i = 0; i < b.size(); ++i) {
          const double next = kx[i] + b[i];
          rn += (next - out.coeffs[i]) * (next - out.coeffs[i]);
          out.coeffs[i] = next;
        }
        local.rel_residual = bn > 0.0 ? std::sqrt(rn) / bn : 0.0;
        ++local.iterations;
        if (!std::isfinite(local.rel_residual)) break;
        if (local.rel_residual <= opts_.rel_tol) break;
      }
      if (!(local.rel_residual <= opts_.rel_tol)) {
        throw SolverError("interior solve did not reach relative residual " + std::to_string(opts_.rel_tol) +
                              " (achieved " + std::to_string(local.rel_residual) + ")",
                          local.rel_residual, local.iterations);
      }
    }
  }
  if (stats) *stats = local;
  return out;
}

BallExpansion solve_laplace_cavity(const cavity::SurfaceGrid& surface, const BoundaryDatum& dirichlet,
                                   SolveOptions opts) {
  return InteriorSolver(surface, dirichlet.lmax, Kind::laplace, 0.0, opts).solve(dirichlet);
}

BallExpansion solve_hsp_cavity(const cavity::SurfaceGrid& surface, const BoundaryDatum& dirichlet, double kappa,
                               SolveOptions opts) {
  return InteriorSolver(surface, dirichlet.lmax, Kind::hsp, kappa, opts).solve(dirichlet);
}

std::vector<double> neumann_trace(const BallExpansion& expansion, const cavity::SurfaceGrid& surface) {
  return neumann_trace(expansion, surface, HarmonicTables(surface, expansion.lmax));
}

std::vector<double> neumann_trace(const BallExpansion& expansion, const cavity::SurfaceGrid& surface,
                                  const HarmonicTables& tables) {
  const int lmax = expansion.lmax;
  const int nb = expansion.nbasis();
  if (expansion.num_balls() != surface.num_balls()) throw Error("neumann_trace: ball count mismatch");
  if (tables.lmax != lmax) throw Error("neumann_trace: table degree mismatch");
  std::vector<double> out(surface.positions.size(), 0.0);
  std::vector<double> flux(sz(lmax) + 1), scaled(sz(nb));
  for (int j = 0; j < surface.num_balls(); ++j) {
    const double R = surface.atoms[sz(j)].radius;
    for (int l = 0; l <= lmax; ++l) {
      flux[sz(l)] = expansion.kind == Kind::laplace
                        ? l / R
                        : expansion.kappa * specfun::log_deriv_i(l, expansion.kappa * R);
    }
    const auto c = expansion.ball(j);
    for (int l = 0; l <= lmax; ++l) {
      for (int m = -l; m <= l; ++m) scaled[sz(l * l + l + m)] = c[sz(l * l + l + m)] * flux[sz(l)];
    }
    for (int n = 0; n < surface.points_per_ball(); ++n) {
      const auto idx = surface.flat(j, n);
      if (surface.exposed[idx]) out[idx] = tables.evaluate(scaled, n);
    }
  }
  return out;
}

double evaluate_at(const BallExpansion& expansion, const cavity::SurfaceGrid& surface, int ball,
                   const Vec3& point) {
  if (ball < 0 || ball >= surface.num_balls()) throw Error("evaluate_at: ball index out of range");
  const auto& a = surface.atoms[sz(ball)];
  if (distance(point, a.center) > a.radius * (1.0 + 1e-12)) {
    throw Error("evaluate_at: point lies outside ball " + std::to_string(ball));
  }
  std::vector<double> basis(sz(expansion.nbasis())), radial(sz(expansion.lmax) + 1), ylm(basis.size());
  basis_at(expansion.kind, expansion.lmax, expansion.kappa, a, point, basis, radial, ylm);
  const auto c = expansion.ball(ball);
  double v = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) v += c[k] * basis[k];
  return v;
}

}  // namespace ddlpb::interior

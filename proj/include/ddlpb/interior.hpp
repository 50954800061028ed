#pragma once

#include <span>
#include <vector>

#include "ddlpb/cavity.hpp"
#include "ddlpb/kernels.hpp"

// Interior solvers on the union of balls: the Laplace and the homogeneous
// screened Poisson problems with Dirichlet data on the exposed surface, each
// discretized by per-ball spherical-harmonic expansions coupled at buried
// Lebedev points.
namespace ddlpb::interior {

enum class Kind { laplace, hsp };

/// Per-ball solution u_j(c_j + r s) = sum c_lm f_l(r) Y_lm(s) with
/// f_l(r) = (r/R_j)^l for Laplace and i_l(kappa r)/i_l(kappa R_j) for HSP.
struct BallExpansion {
  Kind kind = Kind::laplace;
  int lmax = 0;
  double kappa = 0.0;
  std::vector<double> coeffs;  // ball-major, (lmax+1)^2 per ball

  int nbasis() const { return (lmax + 1) * (lmax + 1); }
  int num_balls() const { return static_cast<int>(coeffs.size()) / nbasis(); }
  std::span<const double> ball(int j) const {
    return std::span<const double>(coeffs).subspan(static_cast<std::size_t>(j * nbasis()),
                                                   static_cast<std::size_t>(nbasis()));
  }
};

/// Interface function g in the form the coupled interior systems consume:
/// per ball, the harmonic projection of g restricted to the exposed part of
/// the sphere, 4 pi sum_n w_n e_jn g(x_jn) Y(s_n). On a fully exposed sphere
/// these are the ordinary harmonic coefficients of g.
struct BoundaryDatum {
  int lmax = 0;
  std::vector<double> coeffs;

  static BoundaryDatum zeros(int num_balls, int lmax);

  int nbasis() const { return (lmax + 1) * (lmax + 1); }
  int num_balls() const { return static_cast<int>(coeffs.size()) / nbasis(); }
  std::span<const double> ball(int j) const {
    return std::span<const double>(coeffs).subspan(static_cast<std::size_t>(j * nbasis()),
                                                   static_cast<std::size_t>(nbasis()));
  }
  std::span<double> ball(int j) {
    return std::span<double>(coeffs).subspan(static_cast<std::size_t>(j * nbasis()),
                                             static_cast<std::size_t>(nbasis()));
  }
  /// Harmonic expansion of ball `ball` evaluated at its Lebedev point `point`.
  double value_at(const cavity::SurfaceGrid& surface, int ball, int point) const;

  /// Masked projection of values given at every flat surface point.
  static BoundaryDatum from_values(const cavity::SurfaceGrid& surface, int lmax, std::span<const double> values);
};

struct SolveOptions {
  double rel_tol = 1e-8;
  int restart = 30;
  int max_iter = 500;
  kernels::Exec exec = kernels::Exec::parallel;
};

struct SolveStats {
  int iterations = 0;
  double rel_residual = 0.0;
  bool used_fallback = false;
};

/// Harmonic tables shared by both expansion kinds on one surface.
struct HarmonicTables {
  int lmax = 0;
  int nbasis = 0;
  int npts = 0;
  std::vector<double> values;     // npts x nbasis: Y(s_n)
  std::vector<double> projector;  // npts x nbasis: 4 pi w_n Y(s_n)

  HarmonicTables(const cavity::SurfaceGrid& surface, int lmax);

  /// 4 pi sum_n w_n f_n Y(s_n) over points of one sphere.
  void project(std::span<const double> point_values, std::span<double> coeffs) const;
  double evaluate(std::span<const double> coeffs, int point) const;
};

/// Throws unless the grid integrates products of degree-lmax harmonics exactly.
void check_discretization(const cavity::SurfaceGrid& surface, int lmax);

/// Coupled per-ball solver for one expansion kind. Collocation at the
/// Lebedev points of sphere j: exposed points take the Dirichlet value,
/// buried points take the value of the smallest-index containing ball;
/// coefficients follow by Lebedev projection. The coupled system is solved
/// matrix-free with restarted GMRES, falling back to plain fixed-point sweeps
/// if GMRES stalls.
class InteriorSolver {
 public:
  InteriorSolver(const cavity::SurfaceGrid& surface, int lmax, Kind kind, double kappa = 0.0,
                 SolveOptions opts = {});

  /// dirichlet holds values at every flat surface point; only exposed ones are read.
  BallExpansion solve(std::span<const double> dirichlet, const BallExpansion* warm_start = nullptr,
                      SolveStats* stats = nullptr) const;
  BallExpansion solve(const BoundaryDatum& dirichlet, const BallExpansion* warm_start = nullptr,
                      SolveStats* stats = nullptr) const;
  /// Solves (I - K) x = b for a right-hand side in BoundaryDatum layout.
  BallExpansion solve_rhs(std::span<const double> b, const BallExpansion* warm_start = nullptr,
                          SolveStats* stats = nullptr) const;

  /// y = K x, the buried-point coupling part of the system (I - K) x = b.
  void apply_coupling(std::span<const double> x, std::span<double> y) const;
  /// b = projection of the exposed Dirichlet values.
  std::vector<double> rhs(std::span<const double> dirichlet) const;

  const cavity::SurfaceGrid& surface() const { return *surface_; }
  const HarmonicTables& tables() const { return tables_; }
  const kernels::CouplingRows& coupling_rows() const { return rows_; }
  Kind kind() const { return kind_; }
  int lmax() const { return lmax_; }
  double kappa() const { return kappa_; }

 private:
  const cavity::SurfaceGrid* surface_;
  int lmax_;
  Kind kind_;
  double kappa_;
  SolveOptions opts_;
  HarmonicTables tables_;
  kernels::CouplingRows rows_;
};

BallExpansion solve_laplace_cavity(const cavity::SurfaceGrid& surface, const BoundaryDatum& dirichlet,
                                   SolveOptions opts = {});
BallExpansion solve_hsp_cavity(const cavity::SurfaceGrid& surface, const BoundaryDatum& dirichlet, double kappa,
                               SolveOptions opts = {});

/// Outward normal derivative at every flat surface point (zero where buried).
std::vector<double> neumann_trace(const BallExpansion& expansion, const cavity::SurfaceGrid& surface);
std::vector<double> neumann_trace(const BallExpansion& expansion, const cavity::SurfaceGrid& surface,
                                  const HarmonicTables& tables);

/// Evaluates ball `ball`'s expansion at a point inside that ball.
double evaluate_at(const BallExpansion& expansion, const cavity::SurfaceGrid& surface, int ball,
                   const Vec3& point);

/// f_l(r) for all l <= lmax of one ball.
void radial_factors(Kind kind, int lmax, double kappa, double radius, double r, std::span<double> out);

}  // namespace ddlpb::interior

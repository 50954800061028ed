#pragma once

#include <span>
#include <vector>

// Exact per-mode analysis of the interface iteration on a single ball of
// radius R. Operator eigenvalues on degree-l harmonics give the
// spectral-equivalence constants and a scalar Richardson oracle.
namespace ddlpb::analytic {

struct PhysicalParams {
  double eps1 = 1.0;     // solute permittivity
  double eps2 = 78.54;   // solvent permittivity
  double kappa = 0.104;  // inverse Debye length, 1/Angstrom

  /// Throws unless every field is positive and finite.
  void validate() const;
};

/// Eigenvalue of the interior Laplace DtN map: eps1 * l / R.
double dtn_laplace_eig(int l, double R, const PhysicalParams& p);

/// Eigenvalue of the exterior screened DtN map: eps2 * kappa * (-k_l'/k_l)(kappa R).
double dtn_hsp_exterior_eig(int l, double R, const PhysicalParams& p);

/// Eigenvalue of the interior screened DtN map: eps2 * kappa * (i_l'/i_l)(kappa R).
double dtn_hsp_interior_eig(int l, double R, const PhysicalParams& p);

/// Eigenvalue of the Yukawa single-layer operator on the sphere:
/// kappa R^2 i_l(kappa R) k_l(kappa R).
double single_layer_eig(int l, double R, double kappa);

struct SpectralBounds {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// C1 = min(eps1/eps2, 1/(1+C_S)), C2 = max(1, eps1/eps2).
SpectralBounds spectral_bounds(const PhysicalParams& p, double sobolev_const);

/// Upper bound R^3/3 of the interior-exterior Sobolev constant of a ball.
double sobolev_ball_bound(double R);

/// Per-mode ratio R^3 / ((2l+3)(l+1)); its supremum over l is the bound above.
double sobolev_mode_ratio(int l, double R);

/// 2 / (C1 + C2).
double optimal_alpha(double c1, double c2);

/// 2 / (eps1/eps2 + max(1, eps1/eps2)), the optimal step with the C_S term dropped.
double practical_alpha(const PhysicalParams& p);

struct ModeEigen {
  int degree = 0;
  double lambda_r = 0.0;
  double lambda_c = 0.0;
  double lambda_e = 0.0;
  double mu = 0.0;  // (lambda_r + lambda_c) / (lambda_e + lambda_c)
};

struct ModeSpectrum {
  double radius = 0.0;
  PhysicalParams params;
  std::vector<ModeEigen> modes;  // indexed by degree

  int lmax() const { return static_cast<int>(modes.size()) - 1; }
  double mu_min() const;
  double mu_max() const;
};

ModeSpectrum mode_spectrum(double R, const PhysicalParams& p, int lmax);

/// max_l |1 - alpha mu(l)|.
double convergence_radius(double alpha, const ModeSpectrum& spectrum);

struct ModeRichardsonTrace {
  // iterates[k] holds g^k in harmonic layout, k = 0..iterations
  std::vector<std::vector<double>> iterates;
  // errors[k] = max-norm of g^k - g*, with g* = source / mu
  std::vector<double> errors;
  std::vector<double> fixed_point;
  int iterations = 0;
  bool converged = false;
  bool diverged = false;
};

/// Scalar Richardson recurrence g_{k+1} = (1 - alpha mu(l)) g_k + alpha s,
/// applied coefficient-wise to vectors in harmonic layout ((lmax+1)^2 entries,
/// lmax <= spectrum.lmax()). An empty source means zero. Stops once the
/// error falls below tol times the initial error, or after kmax steps.
/// Diverged means the final error exceeds the initial one.
ModeRichardsonTrace mode_richardson(const ModeSpectrum& spectrum, std::span<const double> g0,
                                    std::span<const double> source, double alpha, double tol, int kmax);

/// Reaction potential at the centre of a ball of radius R holding a central
/// point charge q: (q/R) (1/(eps2 (1 + kappa R)) - 1/eps1).
double born_ion_reaction(double q, double R, const PhysicalParams& p);

}  // namespace ddlpb::analytic

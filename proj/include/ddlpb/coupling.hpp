#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ddlpb/ball_analytic.hpp"
#include "ddlpb/cavity.hpp"
#include "ddlpb/interior.hpp"

// Outer interface iteration: the reaction potential inside the cavity and the
// screened exterior potential are coupled through a Dirichlet datum g on the
// cavity boundary, updated by a relaxed Richardson step preconditioned with
// the Yukawa single-layer operator.
namespace ddlpb::coupling {

/// Coulomb constant in kJ mol^-1 Angstrom e^-2.
inline constexpr double kCoulombKjMol = 1389.35457644382;

/// Vacuum potential sum_i q_i / (eps1 |x - x_i|). Throws if a point lies
/// within 1e-12 Angstrom of a charged atom.
std::vector<double> psi0_eval(std::span<const cavity::Atom> atoms, std::span<const Vec3> points, double eps1);
std::vector<Vec3> psi0_gradient(std::span<const cavity::Atom> atoms, std::span<const Vec3> points, double eps1);

enum class Targets { exposed, all };

/// Yukawa single layer S sigma on the discrete surface. sigma is read at
/// exposed flat points. The owning sphere's contribution is applied
/// spectrally up to degree lmax. Other spheres contribute through their
/// exposed Lebedev elements, each treated as a Gaussian charge of weight
/// 4 pi w_n R_j^2 sigma whose width is the radius of a disc of the same
/// area; for well-separated pairs this is the plain quadrature sum. Output
/// is in flat layout, zero at points not targeted.
class SingleLayer {
 public:
  SingleLayer(const cavity::SurfaceGrid& surface, double kappa, int lmax,
              kernels::Exec exec = kernels::Exec::parallel);

  std::vector<double> apply(std::span<const double> sigma, Targets targets = Targets::exposed) const;
  /// S sigma at exposed points in BoundaryDatum layout (masked projection).
  std::vector<double> apply_coefficients(std::span<const double> sigma) const;

  const interior::HarmonicTables& tables() const { return tables_; }

 private:
  struct TargetSet {
    std::vector<std::size_t> flat;
    std::vector<Vec3> positions;
    std::vector<int> owner;
  };
  TargetSet make_targets(bool (*keep)(const cavity::SurfaceGrid&, std::size_t)) const;
  void values_at(std::span<const double> sigma, const TargetSet& targets, std::span<double> out) const;

  const cavity::SurfaceGrid* surface_;
  double kappa_;
  int lmax_;
  kernels::Exec exec_;
  interior::HarmonicTables tables_;
  std::vector<double> eig_;  // per ball, per degree
  std::vector<Vec3> src_pos_;
  std::vector<int> src_owner_;
  std::vector<std::size_t> src_flat_;
  std::vector<double> src_scale_;  // w_n R_j^2
  std::vector<double> src_width_;  // radius of a disc with the element's area
  TargetSet exposed_targets_;
  TargetSet all_targets_;
};

std::vector<double> apply_single_layer(const cavity::SurfaceGrid& surface, std::span<const double> sigma,
                                       double kappa, int lmax, Targets targets = Targets::exposed);

enum class InitialGuess { zero, psi0 };

std::string to_string(InitialGuess g);
InitialGuess initial_guess_from_string(const std::string& s);

struct SolverConfig {
  analytic::PhysicalParams params;
  int lmax = 7;
  int leb_order = 86;
  double alpha = 1.0;
  double tol = 1e-4;
  int kmax = 60;
  InitialGuess g0 = InitialGuess::zero;
  double inner_tol = 1e-8;
  double delta = cavity::kDefaultBuriedTolerance;
  bool keep_history = false;
  kernels::Exec exec = kernels::Exec::parallel;

  void validate() const;
};

struct IterationReport {
  std::vector<double> energies_kjmol;  // E_1 .. E_n
  std::vector<double> rel_errors;      // Err_1 (NaN) .. Err_n
  bool converged = false;
  int n_ite = 0;
  double alpha = 0.0;
  interior::BoundaryDatum final_datum;
  std::vector<interior::BoundaryDatum> history;  // g^0 .. g^n when keep_history is set
  double wall_seconds = 0.0;

  double final_energy() const { return energies_kjmol.empty() ? 0.0 : energies_kjmol.back(); }
  double final_error() const { return rel_errors.empty() ? 0.0 : rel_errors.back(); }
};

/// One reaction-potential evaluation and datum update.
struct StepResult {
  interior::BoundaryDatum next;
  interior::BallExpansion reaction;  // psi_r solved from the input datum
  interior::BallExpansion screened;  // psi_e solved from the input datum
  double energy = 0.0;               // e^2 / Angstrom
};

/// Precomputed discretization of one cavity. All methods are const and safe
/// to call from several threads at once.
class DdlpbSolver {
 public:
  DdlpbSolver(std::span<const cavity::Atom> atoms, const SolverConfig& config);

  const cavity::SurfaceGrid& surface() const { return *surface_; }
  const SolverConfig& config() const { return config_; }

  interior::BoundaryDatum initial_datum(InitialGuess kind) const;

  /// The affine map g -> S[dn psi_e - (eps1/eps2) dn(psi0 + psi_r)] in
  /// coefficient form; its fixed points solve the interface problem.
  interior::BoundaryDatum interface_map(const interior::BoundaryDatum& g) const;

  StepResult step(const interior::BoundaryDatum& g, double alpha) const;

  IterationReport run() const;
  IterationReport run(double alpha) const;
  IterationReport run(const interior::BoundaryDatum& g0, double alpha) const;

 private:
  StepResult step_impl(const interior::BoundaryDatum& g, double alpha, const interior::BallExpansion* warm_r,
                       const interior::BallExpansion* warm_e, bool need_update) const;

  SolverConfig config_;
  std::unique_ptr<cavity::SurfaceGrid> surface_;
  std::unique_ptr<interior::InteriorSolver> laplace_;
  std::unique_ptr<interior::InteriorSolver> hsp_;
  std::unique_ptr<SingleLayer> single_layer_;
  interior::BoundaryDatum psi0_datum_;
  std::vector<double> dn_psi0_;  // flat, zero where buried
};

/// E = 1/2 sum_i q_i psi_r(x_i) in e^2/Angstrom, with psi_r taken from ball
/// i's own expansion at its centre.
double solvation_energy(const interior::BallExpansion& reaction, std::span<const cavity::Atom> atoms);

IterationReport richardson_run(std::span<const cavity::Atom> atoms, const SolverConfig& config);
IterationReport richardson_run(std::span<const cavity::Atom> atoms, const SolverConfig& config,
                               const interior::BoundaryDatum& g0);

struct SweepRow {
  double alpha = 0.0;
  int n_ite = 0;
  bool converged = false;
  double energy_kjmol = 0.0;
  double err_final = 0.0;
  std::string failure;  // empty unless the run aborted
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool has_optimum = false;
  double alpha_opt = 0.0;  // smallest alpha reaching the minimal n_ite among converged rows
};

/// Runs every alpha from the same initial datum; alphas run in parallel.
SweepResult alpha_sweep(std::span<const cavity::Atom> atoms, const SolverConfig& config,
                        std::span<const double> alphas);

}  // namespace ddlpb::coupling

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ddlpb/geometry.hpp"

// Hot loops of the solver. Each kernel has a serial reference version and an
// OpenMP version; both visit every output in the same order, so results agree
// bit for bit regardless of thread count.
namespace ddlpb::kernels {

enum class Exec { serial, parallel };

/// Buried-point rows of the Schwarz coupling map for one expansion kind.
/// For ball j, entries ball_offset[j] .. ball_offset[j+1] list the buried
/// points n of sphere j, the ball i that supplies their value, and the
/// nbasis values of ball i's basis functions evaluated at x_jn.
struct CouplingRows {
  int nbasis = 0;
  std::vector<std::size_t> ball_offset;  // num_balls + 1
  std::vector<int> point;
  std::vector<int> source;
  std::vector<double> basis;  // entries x nbasis, row-major

  int num_balls() const { return static_cast<int>(ball_offset.size()) - 1; }
};

/// y_j = sum over buried n of projector[n, :] * (basis_row(j, n) . x_source).
/// projector is npts x nbasis (4 pi w_n Y(s_n)); x, y hold num_balls blocks.
void schwarz_apply(const CouplingRows& rows, std::span<const double> projector, std::span<const double> x,
                   std::span<double> y, Exec exec);

/// Screened potential, times 4 pi, at distance d of a Gaussian charge cloud
/// exp(-r^2/a^2) scaled so that its far field is exactly exp(-kappa d)/d
/// (total charge exp(-kappa^2 a^2/4)). Equals exp(-kappa d)/d for a = 0 and
/// for d >= 6.5 a, where the two differ by less than erfc(6.5).
double screened_gaussian(double d, double a, double kappa);

/// out[t] = sum_s q[s] G(d) over sources with owner[s] != target_owner[t],
/// d = |target[t] - source[s]|, G = screened_gaussian(d, width[s], kappa).
/// An empty width span means point sources (G = exp(-kappa d)/d, pairs
/// closer than 1e-12 skipped).
void yukawa_cross(std::span<const Vec3> sources, std::span<const int> source_owner, std::span<const double> q,
                  std::span<const double> width, std::span<const Vec3> targets, std::span<const int> target_owner, double kappa,
                  std::span<double> out, Exec exec);

namespace serial {
void schwarz_apply(const CouplingRows& rows, std::span<const double> projector, std::span<const double> x,
                   std::span<double> y);
void yukawa_cross(std::span<const Vec3> sources, std::span<const int> source_owner, std::span<const double> q,
                  std::span<const double> width, std::span<const Vec3> targets, std::span<const int> target_owner, double kappa,
                  std::span<double> out);
}  // namespace serial

namespace omp {
void schwarz_apply(const CouplingRows& rows, std::span<const double> projector, std::span<const double> x,
                   std::span<double> y);
void yukawa_cross(std::span<const Vec3> sources, std::span<const int> source_owner, std::span<const double> q,
                  std::span<const double> width, std::span<const Vec3> targets, std::span<const int> target_owner, double kappa,
                  std::span<double> out);
}  // namespace omp

}  // namespace ddlpb::kernels

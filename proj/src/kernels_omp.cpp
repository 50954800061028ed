#include "kernels_detail.hpp"

namespace ddlpb::kernels {

namespace omp {

void schwarz_apply(const CouplingRows& rows, std::span<const double> projector, std::span<const double> x,
                   std::span<double> y) {
  const int nballs = rows.num_balls();
#pragma omp parallel for schedule(dynamic, 4)
  for (int j = 0; j < nballs; ++j) detail::schwarz_ball(rows, projector, x, y, j);
}

void yukawa_cross(std::span<const Vec3> sources, std::span<const int> source_owner, std::span<const double> q,
                  std::span<const double> width, std::span<const Vec3> targets, std::span<const int> target_owner, double kappa,
                  std::span<double> out) {
  const auto nt = static_cast<long>(targets.size());
#pragma omp parallel for schedule(static)
  for (long t = 0; t < nt; ++t) {
    const auto tt = static_cast<std::size_t>(t);
    out[tt] = detail::yukawa_target(sources, source_owner, q, width, targets[tt], target_owner[tt], kappa);
  }
}

}  // namespace omp

double screened_gaussian(double d, double a, double kappa) { return detail::screened_gaussian(d, a, kappa); }

void schwarz_apply(const CouplingRows& rows, std::span<const double> projector, std::span<const double> x,
                   std::span<double> y, Exec exec) {
  if (exec == Exec::serial) {
    serial::schwarz_apply(rows, projector, x, y);
  } else {
    omp::schwarz_apply(rows, projector, x, y);
  }
}

void yukawa_cross(std::span<const Vec3> sources, std::span<const int> source_owner, std::span<const double> q,
                  std::span<const double> width, std::span<const Vec3> targets, std::span<const int> target_owner, double kappa,
                  std::span<double> out, Exec exec) {
  if (exec == Exec::serial) {
    serial::yukawa_cross(sources, source_owner, q, width, targets, target_owner, kappa, out);
  } else {
    omp::yukawa_cross(sources, source_owner, q, width, targets, target_owner, kappa, out);
  }
}

}  // namespace ddlpb::kernels

#include "kernels_detail.hpp"

namespace ddlpb::kernels::serial {

void schwarz_apply(const CouplingRows& rows, std::span<const double> projector, std::span<const double> x,
                   std::span<double> y) {
  for (int j = 0; j < rows.num_balls(); ++j) detail::schwarz_ball(rows, projector, x, y, j);
}

void yukawa_cross(std::span<const Vec3> sources, std::span<const int> source_owner, std::span<const double> q,
                  std::span<const double> width, std::span<const Vec3> targets, std::span<const int> target_owner, double kappa,
                  std::span<double> out) {
  for (std::size_t t = 0; t < targets.size(); ++t) {
    out[t] = detail::yukawa_target(sources, source_owner, q, width, targets[t], target_owner[t], kappa);
  }
}

}  // namespace ddlpb::kernels::serial

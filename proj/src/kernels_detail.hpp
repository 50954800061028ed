#pragma once

#include <cmath>
#include <numbers>
#include <span>

#include "ddlpb/kernels.hpp"

// Per-output bodies shared by the serial and OpenMP drivers.
namespace ddlpb::kernels::detail {

inline void schwarz_ball(const CouplingRows& rows, std::span<const double> projector, std::span<const double> x,
                         std::span<double> y, int j) {
  const auto nb = static_cast<std::size_t>(rows.nbasis);
  double* yj = y.data() + static_cast<std::size_t>(j) * nb;
  for (std::size_t k = 0; k < nb; ++k) yj[k] = 0.0;
  for (std::size_t e = rows.ball_offset[static_cast<std::size_t>(j)];
       e < rows.ball_offset[static_cast<std::size_t>(j) + 1]; ++e) {
    const double* row = rows.basis.data() + e * nb;
    const double* xs = x.data() + static_cast<std::size_t>(rows.source[e]) * nb;
    double v = 0.0;
    for (std::size_t k = 0; k < nb; ++k) v += row[k] * xs[k];
    const double* proj = projector.data() + static_cast<std::size_t>(rows.point[e]) * nb;
    for (std::size_t k = 0; k < nb; ++k) yj[k] += v * proj[k];
  }
}

inline constexpr double kGaussianCutoff = 6.5;

inline double screened_gaussian(double d, double a, double kappa) {
  if (a <= 0.0 || d >= kGaussianCutoff * a) return std::exp(-kappa * d) / d;
  const double b = 0.5 * kappa * a;
  const double u = d / a;
  if (u < 1e-3) {
    const double centre = 2.0 * std::exp(-b * b) / (a * std::sqrt(std::numbers::pi)) - kappa * std::erfc(b);
    const double density = 4.0 * std::exp(-b * b) / (std::sqrt(std::numbers::pi) * a * a * a);
    return centre + (kappa * kappa * centre - density) * d * d / 6.0;
  }
  return (std::exp(-kappa * d) * std::erfc(b - u) - std::exp(kappa * d) * std::erfc(b + u)) / (2.0 * d);
}

inline double yukawa_target(std::span<const Vec3> sources, std::span<const int> source_owner,
                            std::span<const double> q, std::span<const double> width, const Vec3& t, int owner,
                            double kappa) {
  const bool smeared = !width.empty();
  double acc = 0.0;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    if (source_owner[s] == owner) continue;
    const double dx = t[0] - sources[s][0], dy = t[1] - sources[s][1], dz = t[2] - sources[s][2];
    const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
    if (smeared) {
      acc += q[s] * screened_gaussian(d, width[s], kappa);
    } else if (d >= 1e-12) {
      acc += q[s] * std::exp(-kappa * d) / d;
    }
  }
  return acc;
}

}  // namespace ddlpb::kernels::detail

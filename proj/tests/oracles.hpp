#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ddlpb/geometry.hpp"

// Reference implementations that share no code with the library.
namespace oracle {

inline constexpr double pi = std::numbers::pi;

// i_l(x) = sqrt(pi/(2x)) I_{l+1/2}(x)
inline double sph_i(int l, double x) { return std::sqrt(pi / (2.0 * x)) * std::cyl_bessel_i(l + 0.5, x); }

// k_l(x) = sqrt(2/(pi x)) K_{l+1/2}(x)
inline double sph_k(int l, double x) { return std::sqrt(2.0 / (pi * x)) * std::cyl_bessel_k(l + 0.5, x); }

// Real orthonormal harmonic without the Condon-Shortley phase, built from
// the standard library's spherical Legendre function (which carries it).
inline double real_ylm(int l, int m, const ddlpb::Vec3& s) {
  const double theta = std::acos(std::clamp(s[2], -1.0, 1.0));
  const double phi = std::atan2(s[1], s[0]);
  const int am = std::abs(m);
  const double p = std::sph_legendre(static_cast<unsigned>(l), static_cast<unsigned>(am), theta);
  if (m == 0) return p;
  const double sign = (am % 2 == 0) ? 1.0 : -1.0;
  return std::sqrt(2.0) * sign * p * (m > 0 ? std::cos(am * phi) : std::sin(am * phi));
}

inline ddlpb::Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ddlpb::Vec3 v{n(rng), n(rng), n(rng)};
  const double r = ddlpb::norm(v);
  return {v[0] / r, v[1] / r, v[2] / r};
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = z;
    w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
}

// Integral of f over the unit sphere by Gauss-Legendre in cos(theta) and the
// trapezoid rule in phi.
template <class F>
double sphere_integral(F&& f, int n_theta = 96, int n_phi = 192) {
  std::vector<double> x, w;
  gauss_legendre(n_theta, x, w);
  double acc = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double ct = x[static_cast<std::size_t>(i)];
    const double st = std::sqrt(1.0 - ct * ct);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * pi * j / n_phi;
      acc += w[static_cast<std::size_t>(i)] * (2.0 * pi / n_phi) * f(ddlpb::Vec3{st * std::cos(phi), st * std::sin(phi), ct});
    }
  }
  return acc;
}

}  // namespace oracle

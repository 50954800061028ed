#pragma once

#include <span>
#include <vector>

#include "ddlpb/geometry.hpp"

// Special functions on the unit sphere: real spherical harmonics with their
// modified spherical Bessel radial partners, plus Lebedev quadrature.
namespace ddlpb::specfun {

/// Degree/order pair of a real spherical harmonic, |order| <= degree.
struct HarmonicIndex {
  int degree = 0;
  int order = 0;

  bool valid() const { return degree >= 0 && order >= -degree && order <= degree; }
  /// Position inside a basis truncated at any lmax >= degree.
  int linear() const { return degree * degree + degree + order; }
  static HarmonicIndex from_linear(int k);

  friend bool operator==(const HarmonicIndex&, const HarmonicIndex&) = default;
};

constexpr int harmonic_count(int lmax) { return (lmax + 1) * (lmax + 1); }

/// Real orthonormal spherical harmonic Y_l^m(s) without the Condon-Shortley
/// phase. m > 0 carries cos(m phi), m < 0 carries sin(|m| phi).
double real_sph_harm(HarmonicIndex idx, const Vec3& s);

/// All harmonics up to lmax at s, written in linear-index order into out
/// (size harmonic_count(lmax)).
void real_sph_harm_all(int lmax, const Vec3& s, std::span<double> out);

/// Modified spherical Bessel function of the first kind, i_0(x) = sinh(x)/x.
double bessel_i(int l, double x);

/// Modified spherical Bessel function of the second kind in the normalization
/// k_l(x) = sqrt(2/(pi x)) K_{l+1/2}(x), so k_0(x) = exp(-x)/x.
double bessel_k(int l, double x);

/// -k_l'(x)/k_l(x), always >= (l+1)/x.
double log_deriv_k(int l, double x);

/// i_l'(x)/i_l(x), always > 0.
double log_deriv_i(int l, double x);

/// i_{l+1}(x)/i_l(x) without forming either function.
double ratio_i(int l, double x);

/// i_l(x)/i_l(y) for 0 <= x <= y. Handles x = 0.
double bessel_i_quotient(int l, double x, double y);

struct LebedevGrid {
  int order = 0;      // number of points
  int precision = 0;  // algebraic degree integrated exactly
  std::vector<Vec3> points;
  std::vector<double> weights;  // sum to one: integral over S^2 = 4 pi sum w f
};

/// Supported point counts: 6, 14, 26, 38, 50, 74, 86, 110.
std::span<const int> supported_lebedev_orders();

LebedevGrid lebedev_grid(int order);

/// Algebraic precision of a supported order.
int lebedev_precision(int order);

}  // namespace ddlpb::specfun

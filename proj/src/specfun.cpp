#include "ddlpb/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "ddlpb/error.hpp"
#include "ddlpb/lebedev_tables.hpp"

namespace ddlpb::specfun {

namespace {

constexpr double kInv4Pi = 0.25 / std::numbers::pi;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(std::string(fn) + ": argument must be positive and finite, got " + std::to_string(x));
  }
}

void require_degree(int l, const char* fn) {
  if (l < 0) throw Error(std::string(fn) + ": negative degree " + std::to_string(l));
}

// t_n = i_{n+1}(x)/i_n(x) for n = 0..l, by backward recurrence
// i_{n-1}/i_n = (2n+1)/x + i_{n+1}/i_n started well above max(l, x).
std::vector<double> i_ratios(int l, double x) {
  const int start = std::max(l, static_cast<int>(x)) + 48;
  std::vector<double> t(static_cast<std::size_t>(l) + 1);
  double tn = x / (2.0 * start + 3.0);
  for (int n = start; n >= 1; --n) {
    const double prev = 1.0 / (tn + (2.0 * n + 1.0) / x);  // t_{n-1}
    if (n - 1 <= l) t[static_cast<std::size_t>(n - 1)] = prev;
    tn = prev;
  }
  return t;
}

double log_bessel_i(int l, double x) {
  // log(sinh(x)/x) without overflow for large x.
  double acc = x < 20.0 ? std::log(std::sinh(x) / x) : x - std::log(2.0 * x) + std::log1p(-std::exp(-2.0 * x));
  if (l == 0) return acc;
  const auto t = i_ratios(l - 1, x);
  for (double r : t) acc += std::log(r);
  return acc;
}

}  // namespace

HarmonicIndex HarmonicIndex::from_linear(int k) {
  if (k < 0) throw Error("HarmonicIndex::from_linear: negative index");
  const int l = static_cast<int>(std::sqrt(static_cast<double>(k)));
  int deg = l;
  while (deg * deg > k) --deg;
  while ((deg + 1) * (deg + 1) <= k) ++deg;
  return {deg, k - deg * deg - deg};
}

void real_sph_harm_all(int lmax, const Vec3& s, std::span<double> out) {
  if (lmax < 0) throw Error("real_sph_harm_all: negative lmax");
  if (out.size() < static_cast<std::size_t>(harmonic_count(lmax))) {
    throw Error("real_sph_harm_all: output span too small");
  }
  if (std::abs(norm(s) - 1.0) > 1e-12) throw Error("real_sph_harm: direction is not a unit vector");

  const double x = s[0], y = s[1], z = s[2];
  // qmm holds the m-diagonal of the normalized Legendre functions divided by
  // sin^m(theta); the sin^m factor is carried by Re/Im (x + iy)^m.
  double qmm = std::sqrt(kInv4Pi);
  double cm = 1.0, sm = 0.0;  // Re and Im of (x + i y)^m
  for (int m = 0; m <= lmax; ++m) {
    if (m > 0) {
      qmm *= std::sqrt((2.0 * m + 1.0) / (2.0 * m));
      const double c = cm * x - sm * y;
      sm = cm * y + sm * x;
      cm = c;
    }
    const double cpos = m == 0 ? 1.0 : std::numbers::sqrt2 * cm;
    const double cneg = std::numbers::sqrt2 * sm;

    double q_prev2 = 0.0;
    double q_prev = qmm;
    for (int l = m; l <= lmax; ++l) {
      double q;
      if (l == m) {
        q = qmm;
      } else if (l == m + 1) {
        q = std::sqrt(2.0 * m + 3.0) * z * qmm;
      } else {
        const double ll = l, mm = m;
        const double a = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - mm * mm));
        const double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - mm * mm) / (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
        q = a * (z * q_prev - b * q_prev2);
      }
      if (l > m) {
        q_prev2 = q_prev;
        q_prev = q;
      }
      out[static_cast<std::size_t>(l * l + l + m)] = q * cpos;
      if (m > 0) out[static_cast<std::size_t>(l * l + l - m)] = q * cneg;
    }
  }
}

double real_sph_harm(HarmonicIndex idx, const Vec3& s) {
  if (!idx.valid()) {
    throw Error("real_sph_harm: invalid index l=" + std::to_string(idx.degree) + " m=" + std::to_string(idx.order));
  }
  std::vector<double> buf(static_cast<std::size_t>(harmonic_count(idx.degree)));
  real_sph_harm_all(idx.degree, s, buf);
  return buf[static_cast<std::size_t>(idx.linear())];
}

double ratio_i(int l, double x) {
  require_degree(l, "ratio_i");
  require_positive(x, "ratio_i");
  return i_ratios(l, x)[static_cast<std::size_t>(l)];
}

double bessel_i(int l, double x) {
  require_degree(l, "bessel_i");
  require_positive(x, "bessel_i");
  const double i0 = x < 1e-8 ? 1.0 + x * x / 6.0 : std::sinh(x) / x;
  if (!std::isfinite(i0)) throw Error("bessel_i: overflow at x=" + std::to_string(x));
  if (l == 0) return i0;
  const auto t = i_ratios(l - 1, x);
  double v = i0;
  for (double r : t) v *= r;
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error("bessel_i: result out of double range for l=" + std::to_string(l) + " x=" + std::to_string(x));
  }
  return v;
}

double bessel_i_quotient(int l, double x, double y) {
  require_degree(l, "bessel_i_quotient");
  require_positive(y, "bessel_i_quotient");
  if (x < 0.0 || x > y) throw Error("bessel_i_quotient: need 0 <= x <= y");
  if (x == 0.0) return l == 0 ? std::exp(-log_bessel_i(0, y)) : 0.0;
  return std::exp(log_bessel_i(l, x) - log_bessel_i(l, y));
}

double bessel_k(int l, double x) {
  require_degree(l, "bessel_k");
  require_positive(x, "bessel_k");
  const double e = std::exp(-x);
  double k0 = e / x;
  if (!(k0 > 0.0) || !std::isfinite(k0)) throw Error("bessel_k: k_0 out of double range at x=" + std::to_string(x));
  if (l == 0) return k0;
  double k1 = e * (1.0 / x + 1.0 / (x * x));
  // k_{n+1} = k_{n-1} + (2n+1)/x k_n, stable upward.
  for (int n = 1; n < l; ++n) {
    const double k2 = k0 + (2.0 * n + 1.0) / x * k1;
    k0 = k1;
    k1 = k2;
    if (!std::isfinite(k1)) {
      throw Error("bessel_k: overflow for l=" + std::to_string(l) + " x=" + std::to_string(x));
    }
  }
  return k1;
}

double log_deriv_k(int l, double x) {
  require_degree(l, "log_deriv_k");
  require_positive(x, "log_deriv_k");
  // rho_n = k_{n-1}/k_n with k_{-1} = k_0.
  double rho = 1.0;
  for (int n = 0; n < l; ++n) rho = 1.0 / (rho + (2.0 * n + 1.0) / x);
  return rho + (l + 1.0) / x;
}

double log_deriv_i(int l, double x) {
  require_degree(l, "log_deriv_i");
  require_positive(x, "log_deriv_i");
  return i_ratios(l, x)[static_cast<std::size_t>(l)] + l / x;
}

std::span<const int> supported_lebedev_orders() {
  static constexpr int kOrders[] = {6, 14, 26, 38, 50, 74, 86, 110};
  return kOrders;
}

namespace {

const detail::LebedevTable& find_table(int order) {
  for (const auto& t : detail::kLebedevTables) {
    if (t.order == order) return t;
  }
  std::ostringstream msg;
  msg << "lebedev_grid: unsupported order " << order << "; supported orders are";
  for (int o : supported_lebedev_orders()) msg << ' ' << o;
  throw Error(msg.str());
}

}  // namespace

int lebedev_precision(int order) { return find_table(order).precision; }

LebedevGrid lebedev_grid(int order) {
  const auto& table = find_table(order);
  LebedevGrid grid;
  grid.order = table.order;
  grid.precision = table.precision;
  grid.points.reserve(table.nodes.size());
  grid.weights.reserve(table.nodes.size());
  for (const auto& node : table.nodes) {
    Vec3 p{node.x, node.y, node.z};
    const double r = norm(p);
    grid.points.push_back((1.0 / r) * p);
    grid.weights.push_back(node.w);
  }
  return grid;
}

}  // namespace ddlpb::specfun

#include "ddlpb/ball_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ddlpb/error.hpp"
#include "ddlpb/specfun.hpp"

namespace ddlpb::analytic {

namespace {

void check_mode(int l, double R, const char* fn) {
  if (l < 0) throw Error(std::string(fn) + ": negative degree");
  if (!(R > 0.0) || !std::isfinite(R)) throw Error(std::string(fn) + ": radius must be positive");
}

}  // namespace

void PhysicalParams::validate() const {
  auto ok = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!ok(eps1)) throw Error("eps1 must be positive");
  if (!ok(eps2)) throw Error("eps2 must be positive");
  if (!ok(kappa)) throw Error("kappa must be positive (kappa = 0 is not supported)");
}

double dtn_laplace_eig(int l, double R, const PhysicalParams& p) {
  check_mode(l, R, "dtn_laplace_eig");
  return p.eps1 * l / R;
}

double dtn_hsp_exterior_eig(int l, double R, const PhysicalParams& p) {
  check_mode(l, R, "dtn_hsp_exterior_eig");
  p.validate();
  return p.eps2 * p.kappa * specfun::log_deriv_k(l, p.kappa * R);
}

double dtn_hsp_interior_eig(int l, double R, const PhysicalParams& p) {
  check_mode(l, R, "dtn_hsp_interior_eig");
  p.validate();
  return p.eps2 * p.kappa * specfun::log_deriv_i(l, p.kappa * R);
}

double single_layer_eig(int l, double R, double kappa) {
  check_mode(l, R, "single_layer_eig");
  if (!(kappa > 0.0)) throw Error("single_layer_eig: kappa must be positive");
  const double x = kappa * R;
  return kappa * R * R * specfun::bessel_i(l, x) * specfun::bessel_k(l, x);
}

SpectralBounds spectral_bounds(const PhysicalParams& p, double sobolev_const) {
  if (!(sobolev_const > 0.0)) throw Error("spectral_bounds: C_S must be positive");
  const double ratio = p.eps1 / p.eps2;
  return {std::min(ratio, 1.0 / (1.0 + sobolev_const)), std::max(1.0, ratio)};
}

double sobolev_ball_bound(double R) {
  check_mode(0, R, "sobolev_ball_bound");
  return R * R * R / 3.0;
}

double sobolev_mode_ratio(int l, double R) {
  check_mode(l, R, "sobolev_mode_ratio");
  return R * R * R / ((2.0 * l + 3.0) * (l + 1.0));
}

double optimal_alpha(double c1, double c2) {
  if (!(c1 > 0.0) || c1 > c2) throw Error("optimal_alpha: need 0 < C1 <= C2");
  return 2.0 / (c1 + c2);
}

double practical_alpha(const PhysicalParams& p) {
  p.validate();
  const double ratio = p.eps1 / p.eps2;
  return 2.0 / (ratio + std::max(1.0, ratio));
}

double ModeSpectrum::mu_min() const {
  double v = modes.at(0).mu;
  for (const auto& m : modes) v = std::min(v, m.mu);
  return v;
}

double ModeSpectrum::mu_max() const {
  double v = modes.at(0).mu;
  for (const auto& m : modes) v = std::max(v, m.mu);
  return v;
}

ModeSpectrum mode_spectrum(double R, const PhysicalParams& p, int lmax) {
  check_mode(lmax, R, "mode_spectrum");
  p.validate();
  ModeSpectrum s;
  s.radius = R;
  s.params = p;
  s.modes.reserve(static_cast<std::size_t>(lmax) + 1);
  for (int l = 0; l <= lmax; ++l) {
    ModeEigen e;
    e.degree = l;
    e.lambda_r = dtn_laplace_eig(l, R, p);
    e.lambda_c = dtn_hsp_exterior_eig(l, R, p);
    e.lambda_e = dtn_hsp_interior_eig(l, R, p);
    e.mu = (e.lambda_r + e.lambda_c) / (e.lambda_e + e.lambda_c);
    s.modes.push_back(e);
  }
  return s;
}

double convergence_radius(double alpha, const ModeSpectrum& spectrum) {
  if (spectrum.modes.empty()) throw Error("convergence_radius: empty spectrum");
  double r = 0.0;
  for (const auto& m : spectrum.modes) r = std::max(r, std::abs(1.0 - alpha * m.mu));
  return r;
}

ModeRichardsonTrace mode_richardson(const ModeSpectrum& spectrum, std::span<const double> g0,
                                    std::span<const double> source, double alpha, double tol, int kmax) {
  if (!(tol > 0.0)) throw Error("mode_richardson: tol must be positive");
  if (kmax < 1) throw Error("mode_richardson: kmax must be >= 1");
  const int n = static_cast<int>(g0.size());
  const int lmax = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n)))) - 1;
  if (specfun::harmonic_count(lmax) != n) throw Error("mode_richardson: g0 is not in harmonic layout");
  if (lmax > spectrum.lmax()) throw Error("mode_richardson: g0 has more degrees than the spectrum");
  if (!source.empty() && source.size() != g0.size()) throw Error("mode_richardson: source size mismatch");

  std::vector<double> factor(static_cast<std::size_t>(n));
  ModeRichardsonTrace trace;
  trace.fixed_point.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double mu = spectrum.modes[static_cast<std::size_t>(specfun::HarmonicIndex::from_linear(k).degree)].mu;
    factor[static_cast<std::size_t>(k)] = 1.0 - alpha * mu;
    trace.fixed_point[static_cast<std::size_t>(k)] = source.empty() ? 0.0 : source[static_cast<std::size_t>(k)] / mu;
  }

  auto error_of = [&](const std::vector<double>& g) {
    double e = 0.0;
    for (int k = 0; k < n; ++k) {
      e = std::max(e, std::abs(g[static_cast<std::size_t>(k)] - trace.fixed_point[static_cast<std::size_t>(k)]));
    }
    return e;
  };

  std::vector<double> g(g0.begin(), g0.end());
  trace.iterates.push_back(g);
  trace.errors.push_back(error_of(g));
  const double e0 = trace.errors.front();
  if (e0 == 0.0) {
    trace.converged = true;
    return trace;
  }
  for (int it = 1; it <= kmax; ++it) {
    for (int k = 0; k < n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const double s = source.empty() ? 0.0 : source[kk];
      g[kk] = factor[kk] * g[kk] + alpha * s;
    }
    trace.iterates.push_back(g);
    trace.errors.push_back(error_of(g));
    trace.iterations = it;
    if (trace.errors.back() <= tol * e0) {
      trace.converged = true;
      return trace;
    }
    if (!std::isfinite(trace.errors.back())) break;
  }
  trace.diverged = !(trace.errors.back() <= e0);
  return trace;
}

double born_ion_reaction(double q, double R, const PhysicalParams& p) {
  check_mode(0, R, "born_ion_reaction");
  p.validate();
  return (q / R) * (1.0 / (p.eps2 * (1.0 + p.kappa * R)) - 1.0 / p.eps1);
}

}  // namespace ddlpb::analytic

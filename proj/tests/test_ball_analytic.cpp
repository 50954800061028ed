#include <cmath>
#include <vector>

#include "catch_amalgamated.hpp"
#include "ddlpb/ball_analytic.hpp"
#include "ddlpb/error.hpp"
#include "ddlpb/specfun.hpp"
#include "oracles.hpp"

using namespace ddlpb;
using namespace ddlpb::analytic;
using Catch::Approx;

namespace {

std::vector<PhysicalParams> parameter_samples() {
  std::vector<PhysicalParams> out;
  for (double eps2 : {0.5, 1.0, 2.0, 78.54}) {
    for (double kappa : {0.104, 1.0}) out.push_back({1.0, eps2, kappa});
  }
  return out;
}

}  // namespace

TEST_CASE("Laplace DtN eigenvalues", "[analytic]") {
  const PhysicalParams p{1.0, 78.54, 0.104};
  CHECK(dtn_laplace_eig(0, 1.3, p) == 0.0);
  CHECK(dtn_laplace_eig(3, 2.0, p) == Approx(1.5));
  const PhysicalParams p2{2.0, 78.54, 0.104};
  CHECK(dtn_laplace_eig(3, 2.0, p2) == Approx(2.0 * dtn_laplace_eig(3, 2.0, p)));
}

TEST_CASE("exterior screened DtN eigenvalues", "[analytic]") {
  CHECK(dtn_hsp_exterior_eig(0, 1.0, {1.0, 1.0, 1.0}) == Approx(2.0).epsilon(1e-14));
  CHECK(dtn_hsp_exterior_eig(0, 1.0, {1.0, 2.0, 1.0}) == Approx(4.0).epsilon(1e-14));
  const PhysicalParams p{1.0, 78.54, 0.104};
  CHECK(dtn_hsp_exterior_eig(7, 1.8, p) >= p.eps2 * 8.0 / 1.8);
}

TEST_CASE("interior screened DtN eigenvalues", "[analytic]") {
  CHECK(dtn_hsp_interior_eig(0, 1.0, {1.0, 2.0, 1.0}) == Approx(2.0 * (1.0 / std::tanh(1.0) - 1.0)).epsilon(1e-13));
  const double kappa = 1e-4;
  CHECK(dtn_hsp_interior_eig(0, 1.0, {1.0, 2.0, kappa}) == Approx(2.0 * kappa * kappa / 3.0).epsilon(1e-6));
  for (int l = 0; l <= 20; ++l) {
    const auto s = mode_spectrum(1.5, {2.0, 2.0, 0.3}, 20);
    CHECK(s.modes[static_cast<std::size_t>(l)].mu <= 1.0 + 1e-12);
  }
}

TEST_CASE("single-layer eigenvalues", "[analytic]") {
  CHECK(single_layer_eig(0, 1.0, 1.0) == Approx((1.0 - std::exp(-2.0)) / 2.0).epsilon(1e-14));
  CHECK(single_layer_eig(0, 1.0, 1.0) == Approx(0.43233236).epsilon(1e-8));
  CHECK(single_layer_eig(0, 1.7, 1e-7) == Approx(1.7).epsilon(1e-6));
  // Oracle: kappa R^2 i_l k_l from the standard library Bessel functions.
  for (int l : {0, 1, 4, 11}) {
    CHECK(single_layer_eig(l, 1.3, 0.8) == Approx(0.8 * 1.69 * oracle::sph_i(l, 1.04) * oracle::sph_k(l, 1.04)).epsilon(1e-11));
  }
}

TEST_CASE("single layer inverts the sum of the screened DtN maps", "[analytic]") {
  for (double eps2 : {0.5, 78.54}) {
    for (int l = 0; l <= 50; ++l) {
      for (double x : {0.01, 0.3, 1.0, 7.0, 50.0}) {
        const PhysicalParams p{1.0, eps2, x / 1.5};
        const double s = single_layer_eig(l, 1.5, p.kappa);
        const double sum = dtn_hsp_interior_eig(l, 1.5, p) + dtn_hsp_exterior_eig(l, 1.5, p);
        CHECK(s * sum == Approx(eps2).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("spectral bounds and step sizes", "[analytic]") {
  auto b = spectral_bounds({1.0, 2.0, 1.0}, 1.0 / 3.0);
  CHECK(b.c1 == Approx(0.5));
  CHECK(b.c2 == Approx(1.0));
  b = spectral_bounds({1.0, 0.5, 1.0}, 1.0 / 3.0);
  CHECK(b.c1 == Approx(0.75));
  CHECK(b.c2 == Approx(2.0));
  CHECK(spectral_bounds({3.0, 3.0, 1.0}, 2.0).c2 == 1.0);
  CHECK_THROWS_AS(spectral_bounds({1.0, 2.0, 1.0}, 0.0), Error);

  CHECK(practical_alpha({1.0, 2.0, 0.104}) == Approx(4.0 / 3.0));
  CHECK(practical_alpha({1.0, 1.0, 0.104}) == Approx(1.0));
  CHECK(practical_alpha({1.0, 0.5, 0.104}) == Approx(0.5));
  CHECK(practical_alpha({1.0, 78.54, 0.104}) == Approx(1.97485).epsilon(1e-5));
  CHECK(optimal_alpha(0.5, 1.0) == Approx(4.0 / 3.0));
  CHECK_THROWS_AS(optimal_alpha(1.0, 0.5), Error);
}

TEST_CASE("Sobolev ball bound", "[analytic]") {
  CHECK(sobolev_ball_bound(1.0) == Approx(1.0 / 3.0));
  CHECK(sobolev_mode_ratio(0, 1.0) == Approx(1.0 / 3.0));
  CHECK(sobolev_mode_ratio(1, 1.0) == Approx(0.1));
  for (int l = 0; l < 100; ++l) CHECK(sobolev_mode_ratio(l + 1, 2.0) < sobolev_mode_ratio(l, 2.0));
}

TEST_CASE("mode spectrum lies inside the theorem bounds", "[analytic]") {
  for (double R : {1.0, 2.0}) {
    for (const auto& p : parameter_samples()) {
      const auto s = mode_spectrum(R, p, 50);
      const auto b = spectral_bounds(p, sobolev_ball_bound(R));
      for (const auto& m : s.modes) {
        CAPTURE(R, p.eps2, p.kappa, m.degree);
        CHECK(m.lambda_r >= 0.0);
        CHECK(m.lambda_c > 0.0);
        CHECK(m.lambda_e > 0.0);
        CHECK(m.mu >= b.c1 - 1e-12);
        CHECK(m.mu <= b.c2 + 1e-12);
      }
    }
  }
}

TEST_CASE("convergence radius", "[analytic]") {
  const auto s = mode_spectrum(1.0, {1.0, 2.0, 1.0}, 0);
  CHECK(s.modes[0].mu == Approx(4.0 / 4.626070570999).epsilon(1e-10));
  CHECK(convergence_radius(1.0, s) == Approx(0.135335283).epsilon(1e-8));
  CHECK(convergence_radius(0.0, mode_spectrum(1.0, {1.0, 2.0, 1.0}, 10)) == 1.0);
  CHECK(convergence_radius(1.0, mode_spectrum(1.0, {1.0, 1.0, 1e-6}, 10)) < 1e-5);
}

TEST_CASE("argmin of the convergence radius sits next to the optimal step", "[analytic]") {
  for (const auto& p : parameter_samples()) {
    const auto s = mode_spectrum(2.0, p, 50);
    double best_alpha = 0.0, best = 2.0;
    for (int i = 1; i <= 40; ++i) {
      const double a = 0.05 * i;
      const double r = convergence_radius(a, s);
      if (r < best) {
        best = r;
        best_alpha = a;
      }
    }
    CHECK(std::abs(best_alpha - optimal_alpha(s.mu_min(), s.mu_max())) <= 0.05 + 1e-12);
  }
}

TEST_CASE("mode Richardson recurrence", "[analytic]") {
  const PhysicalParams p{1.0, 2.0, 0.5};
  const auto s = mode_spectrum(1.5, p, 3);
  std::vector<double> g0(static_cast<std::size_t>(specfun::harmonic_count(3)), 0.0);

  SECTION("alpha = 1/mu converges in one step") {
    g0[specfun::HarmonicIndex{2, 1}.linear()] = 1.0;
    const auto t = mode_richardson(s, g0, {}, 1.0 / s.modes[2].mu, 1e-8, 10);
    CHECK(t.converged);
    CHECK(t.iterations == 1);
    CHECK(t.errors[1] < 1e-15);
  }
  SECTION("error ratio equals the mode contraction") {
    g0[specfun::HarmonicIndex{3, -2}.linear()] = 0.7;
    const double alpha = 0.6;
    const auto t = mode_richardson(s, g0, {}, alpha, 1e-12, 30);
    for (std::size_t k = 1; k < t.errors.size(); ++k) {
      CHECK(t.errors[k] / t.errors[k - 1] == Approx(std::abs(1.0 - alpha * s.modes[3].mu)).margin(1e-10));
    }
  }
  SECTION("source shifts the fixed point") {
    std::vector<double> src(g0.size(), 0.0);
    src[0] = 0.3;
    const auto t = mode_richardson(s, g0, src, 1.0, 1e-10, 60);
    CHECK(t.converged);
    CHECK(t.fixed_point[0] == Approx(0.3 / s.modes[0].mu));
    CHECK(t.iterates.back()[0] == Approx(0.3 / s.modes[0].mu).epsilon(1e-9));
  }
  SECTION("step beyond the window diverges") {
    const auto s1 = mode_spectrum(1.0, {1.0, 1.0, 0.104}, 5);
    std::fill(g0.begin(), g0.end(), 1.0);
    const auto t = mode_richardson(s1, g0, {}, 2.5, 1e-4, 60);
    CHECK_FALSE(t.converged);
    CHECK(t.diverged);
  }
  CHECK_THROWS_AS(mode_richardson(s, std::vector<double>(5, 0.0), {}, 1.0, 1e-4, 10), Error);
  CHECK_THROWS_AS(mode_richardson(s, g0, {}, 1.0, 0.0, 10), Error);
}

TEST_CASE("mode Richardson converges inside the window and diverges past 2/C1", "[analytic]") {
  for (double R : {1.0, 2.0}) {
    for (const auto& p : parameter_samples()) {
      const auto s = mode_spectrum(R, p, 50);
      const auto b = spectral_bounds(p, sobolev_ball_bound(R));
      std::vector<double> g0(static_cast<std::size_t>(specfun::harmonic_count(50)), 1.0);
      CHECK(convergence_radius(2.0 / b.c2 - 1e-6, s) < 1.0);
      for (double a : {0.25 * (2.0 / b.c2), 0.9 * (2.0 / b.c2)}) {
        const auto t = mode_richardson(s, g0, {}, a, 1e-4, 200000);
        CAPTURE(R, p.eps2, p.kappa, a);
        CHECK(t.converged);
      }
      const auto t = mode_richardson(s, g0, {}, 2.0 / b.c1 + 0.1, 1e-4, 60);
      CHECK(t.diverged);
    }
  }
}

TEST_CASE("Born ion reaction potential", "[analytic]") {
  const PhysicalParams p{1.0, 78.54, 0.104};
  CHECK(born_ion_reaction(1.0, 2.0, p) == Approx(-0.4947297).epsilon(1e-6));
  CHECK(born_ion_reaction(-1.0, 2.0, p) == Approx(-born_ion_reaction(1.0, 2.0, p)));
  CHECK(std::abs(born_ion_reaction(1.0, 2.0, {1.0, 1.0, 1e-9})) < 1e-8);
}

TEST_CASE("invalid physical parameters are rejected", "[analytic]") {
  CHECK_THROWS_AS(PhysicalParams({1.0, 78.54, 0.0}).validate(), Error);
  CHECK_THROWS_AS(PhysicalParams({-1.0, 78.54, 0.1}).validate(), Error);
  CHECK_THROWS_AS(dtn_laplace_eig(-1, 1.0, {}), Error);
  CHECK_THROWS_AS(single_layer_eig(0, 0.0, 1.0), Error);
}

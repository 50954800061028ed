#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "ddlpb/cavity.hpp"
#include "ddlpb/error.hpp"
#include "ddlpb/interior.hpp"
#include "ddlpb/specfun.hpp"
#include "oracles.hpp"

using namespace ddlpb;
using namespace ddlpb::interior;
using Catch::Approx;

namespace {

const std::string kData = DDLPB_DATA_DIR;

SolveOptions tight() {
  SolveOptions o;
  o.rel_tol = 1e-13;
  o.max_iter = 2000;
  return o;
}

template <class F>
std::vector<double> sample(const cavity::SurfaceGrid& s, F&& f) {
  std::vector<double> v(s.positions.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(s.positions[i]);
  return v;
}

double harmonic_cubic(const Vec3& x) { return x[0] * x[0] * x[2] - x[1] * x[1] * x[2] + 0.5 * x[0] - 0.25; }

// Coefficients by direct dense elimination of the collocation system,
// assembled from the standard-library harmonics and Bessel functions.
Eigen::VectorXd dense_solution(const cavity::SurfaceGrid& s, int lmax, Kind kind, double kappa,
                               const std::vector<double>& g) {
  const int nb = specfun::harmonic_count(lmax);
  const int nballs = s.num_balls();
  const int npts = s.points_per_ball();
  const int n = nb * nballs;
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
  auto radial = [&](int l, double r, double R) {
    if (kind == Kind::laplace) return std::pow(r / R, l);
    return oracle::sph_i(l, kappa * r) / oracle::sph_i(l, kappa * R);
  };
  for (int j = 0; j < nballs; ++j) {
    for (int p = 0; p < npts; ++p) {
      const auto idx = s.flat(j, p);
      const auto& dir = s.directions[static_cast<std::size_t>(p)];
      std::vector<double> proj(static_cast<std::size_t>(nb));
      for (int k = 0; k < nb; ++k) {
        const auto h = specfun::HarmonicIndex::from_linear(k);
        proj[static_cast<std::size_t>(k)] = 4.0 * oracle::pi * s.weights[static_cast<std::size_t>(p)] * oracle::real_ylm(h.degree, h.order, dir);
      }
      if (s.exposed[idx]) {
        for (int k = 0; k < nb; ++k) b(j * nb + k) += proj[static_cast<std::size_t>(k)] * g[idx];
        continue;
      }
      const int i = s.container[idx];
      const auto& atom = s.atoms[static_cast<std::size_t>(i)];
      const Vec3 rel = s.positions[idx] - atom.center;
      const double r = norm(rel);
      const Vec3 u = (1.0 / r) * rel;
      for (int k = 0; k < nb; ++k) {
        for (int m = 0; m < nb; ++m) {
          const auto h = specfun::HarmonicIndex::from_linear(m);
          a(j * nb + k, i * nb + m) -= proj[static_cast<std::size_t>(k)] * radial(h.degree, r, atom.radius) * oracle::real_ylm(h.degree, h.order, u);
        }
      }
    }
  }
  return a.partialPivLu().solve(b);
}

}  // namespace

TEST_CASE("single ball reproduces each harmonic mode", "[interior]") {
  const std::vector<cavity::Atom> one{{{0.5, -0.2, 1.0}, 1.7, 1.0}};
  const auto s = cavity::build_surface(one, 86);
  const int lmax = 7;
  for (Kind kind : {Kind::laplace, Kind::hsp}) {
    const InteriorSolver solver(s, lmax, kind, 0.3);
    for (int k = 0; k < specfun::harmonic_count(lmax); ++k) {
      const auto h = specfun::HarmonicIndex::from_linear(k);
      const auto g = sample(s, [&](const Vec3& x) { return oracle::real_ylm(h.degree, h.order, (1.0 / 1.7) * (x - one[0].center)); });
      const auto u = solver.solve(g);
      for (int m = 0; m < specfun::harmonic_count(lmax); ++m) CHECK(u.coeffs[static_cast<std::size_t>(m)] == Approx(m == k ? 1.0 : 0.0).margin(1e-12));
    }
  }
}

TEST_CASE("constant data gives c00 = v sqrt(4 pi)", "[interior]") {
  const std::vector<cavity::Atom> one{{{0.0, 0.0, 0.0}, 2.0, 1.0}};
  const auto s = cavity::build_surface(one, 86);
  const auto u = solve_laplace_cavity(s, BoundaryDatum::from_values(s, 7, std::vector<double>(86, 2.5)));
  CHECK(u.coeffs[0] == Approx(2.5 * std::sqrt(4.0 * oracle::pi)).epsilon(1e-13));
  for (std::size_t k = 1; k < u.coeffs.size(); ++k) CHECK(std::abs(u.coeffs[k]) < 1e-13);
}

TEST_CASE("coupled systems match dense direct elimination", "[interior]") {
  const auto atoms = cavity::read_pqr(kData + "/dimer.pqr");
  const auto s = cavity::build_surface(atoms, 26);
  const int lmax = 3;
  const auto g = sample(s, [](const Vec3& x) { return std::exp(0.3 * x[0]) * std::cos(x[1] + 0.2 * x[2]); });
  for (Kind kind : {Kind::laplace, Kind::hsp}) {
    const double kappa = 0.7;
    const InteriorSolver solver(s, lmax, kind, kappa, tight());
    const auto u = solver.solve(g);
    const auto ref = dense_solution(s, lmax, kind, kappa, g);
    for (std::size_t k = 0; k < u.coeffs.size(); ++k) CHECK(u.coeffs[k] == Approx(ref(static_cast<Eigen::Index>(k))).margin(1e-10));
  }

  const auto benzene = cavity::read_pqr(kData + "/benzene.pqr");
  const auto sb = cavity::build_surface(benzene, 50);
  const auto gb = sample(sb, [](const Vec3& x) { return 1.0 / (1.0 + 0.1 * dot(x, x)); });
  const InteriorSolver solver(sb, 5, Kind::hsp, 0.104, tight());
  const auto u = solver.solve(gb);
  const auto ref = dense_solution(sb, 5, Kind::hsp, 0.104, gb);
  for (std::size_t k = 0; k < u.coeffs.size(); ++k) CHECK(u.coeffs[k] == Approx(ref(static_cast<Eigen::Index>(k))).margin(1e-9));
}

TEST_CASE("harmonic polynomial data is reproduced exactly", "[interior]") {
  const auto atoms = cavity::read_pqr(kData + "/benzene.pqr");
  const auto s = cavity::build_surface(atoms, 86);
  const auto u = solve_laplace_cavity(s, BoundaryDatum::from_values(s, 7, sample(s, harmonic_cubic)), tight());
  std::mt19937_64 rng(2);
  for (int j = 0; j < s.num_balls(); ++j) {
    for (int t = 0; t < 5; ++t) {
      const auto& a = atoms[static_cast<std::size_t>(j)];
      const Vec3 x = a.center + (0.9 * a.radius) * oracle::random_unit(rng);
      CHECK(evaluate_at(u, s, j, x) == Approx(harmonic_cubic(x)).margin(1e-10));
    }
  }
}

TEST_CASE("dimer solution is mirror symmetric", "[interior]") {
  const auto atoms = cavity::read_pqr(kData + "/dimer.pqr");
  const auto s = cavity::build_surface(atoms, 86);
  const auto g = sample(s, [](const Vec3& x) { return std::cosh(x[0]) + x[1] * x[2] + std::sin(x[2]); });
  const auto u = solve_hsp_cavity(s, BoundaryDatum::from_values(s, 7, g), 0.5, tight());
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Vec3 x = atoms[0].center + 1.2 * oracle::random_unit(rng);
    const Vec3 mirror{-x[0], x[1], x[2]};
    CHECK(evaluate_at(u, s, 0, x) == Approx(evaluate_at(u, s, 1, mirror)).margin(1e-10));
  }
}

TEST_CASE("screened solve tends to the Laplace solve as kappa vanishes", "[interior]") {
  const auto atoms = cavity::read_pqr(kData + "/benzene.pqr");
  const auto s = cavity::build_surface(atoms, 86);
  const auto g = BoundaryDatum::from_values(s, 7, sample(s, [](const Vec3& x) { return std::sin(x[0]) * std::exp(-0.1 * x[1]); }));
  const auto a = solve_laplace_cavity(s, g, tight());
  const auto b = solve_hsp_cavity(s, g, 1e-4, tight());
  for (std::size_t k = 0; k < a.coeffs.size(); ++k) CHECK(b.coeffs[k] == Approx(a.coeffs[k]).margin(1e-6));
}

TEST_CASE("interior solves are linear", "[interior]") {
  const auto atoms = cavity::read_pqr(kData + "/benzene.pqr");
  const auto s = cavity::build_surface(atoms, 86);
  const InteriorSolver solver(s, 7, Kind::hsp, 0.104, tight());
  const auto g1 = sample(s, [](const Vec3& x) { return std::sin(x[0] + x[1]); });
  const auto g2 = sample(s, [](const Vec3& x) { return x[2] * x[2] - 0.3; });
  std::vector<double> mix(g1.size());
  for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = 2.0 * g1[i] - 0.5 * g2[i];
  const auto u1 = solver.solve(g1), u2 = solver.solve(g2), um = solver.solve(mix);
  for (std::size_t k = 0; k < um.coeffs.size(); ++k) CHECK(um.coeffs[k] == Approx(2.0 * u1.coeffs[k] - 0.5 * u2.coeffs[k]).margin(1e-10));
}

TEST_CASE("discrete maximum principle holds for smooth data", "[interior]") {
  const auto atoms = cavity::read_pqr(kData + "/benzene.pqr");
  const auto s = cavity::build_surface(atoms, 86);
  const auto g = sample(s, [](const Vec3& x) { return std::tanh(0.4 * x[0] - 0.3 * x[1]); });
  double gmax = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (s.exposed[i]) gmax = std::max(gmax, std::abs(g[i]));
  }
  for (Kind kind : {Kind::laplace, Kind::hsp}) {
    const InteriorSolver solver(s, 7, kind, 0.5, tight());
    const auto u = solver.solve(g);
    std::mt19937_64 rng(8);
    for (int j = 0; j < s.num_balls(); ++j) {
      const auto& a = atoms[static_cast<std::size_t>(j)];
      for (int t = 0; t < 20; ++t) {
        const Vec3 x = a.center + (0.8 * a.radius) * oracle::random_unit(rng);
        CHECK(std::abs(evaluate_at(u, s, j, x)) <= gmax * 1.01);
      }
    }
  }
}

TEST_CASE("Neumann traces", "[interior]") {
  const std::vector<cavity::Atom> one{{{0.0, 0.0, 0.0}, 1.5, 1.0}};
  const auto s = cavity::build_surface(one, 86);
  const int lmax = 6;
  for (int l : {0, 1, 4, 6}) {
    const auto g = sample(s, [&](const Vec3& x) { return oracle::real_ylm(l, l / 2, (1.0 / 1.5) * x); });
    const auto ul = solve_laplace_cavity(s, BoundaryDatum::from_values(s, lmax, g));
    const auto uh = solve_hsp_cavity(s, BoundaryDatum::from_values(s, lmax, g), 0.8);
    const auto dl = neumann_trace(ul, s);
    const auto dh = neumann_trace(uh, s);
    const double x = 0.8 * 1.5;
    const double ih = 0.8 * (l * oracle::sph_i(l, x) / x + oracle::sph_i(l + 1, x)) / oracle::sph_i(l, x);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(dl[i] == Approx(l / 1.5 * g[i]).margin(1e-12));
      CHECK(dh[i] == Approx(ih * g[i]).margin(1e-12));
    }
  }

  const auto atoms = cavity::read_pqr(kData + "/dimer.pqr");
  const auto sd = cavity::build_surface(atoms, 86);
  const auto u = solve_laplace_cavity(sd, BoundaryDatum::from_values(sd, 7, sample(sd, harmonic_cubic)), tight());
  const auto d = neumann_trace(u, sd);
  for (int j = 0; j < 2; ++j) {
    for (int n = 0; n < sd.points_per_ball(); ++n) {
      const auto idx = sd.flat(j, n);
      if (!sd.exposed[idx]) {
        CHECK(d[idx] == 0.0);
        continue;
      }
      const Vec3 x = sd.positions[idx];
      const Vec3 grad{2.0 * x[0] * x[2] + 0.5, -2.0 * x[1] * x[2], x[0] * x[0] - x[1] * x[1]};
      CHECK(d[idx] == Approx(dot(grad, sd.directions[static_cast<std::size_t>(n)])).margin(1e-9));
    }
  }
}

TEST_CASE("point evaluation inside a ball", "[interior]") {
  const std::vector<cavity::Atom> one{{{0.0, 0.0, 0.0}, 1.0, 1.0}};
  const auto s = cavity::build_surface(one, 110);
  const int lmax = 8;
  const auto g = sample(s, [](const Vec3& x) { return std::exp(x[2] + 0.5 * x[0]); });
  const auto u = solve_laplace_cavity(s, BoundaryDatum::from_values(s, lmax, g));

  SECTION("mean value at the centre") {
    const double mean = oracle::sphere_integral([](const Vec3& y) { return std::exp(y[2] + 0.5 * y[0]); }) / (4.0 * oracle::pi);
    CHECK(evaluate_at(u, s, 0, {0.0, 0.0, 0.0}) == Approx(mean).epsilon(1e-12));
  }
  SECTION("Poisson integral off centre") {
    for (const Vec3& x : {Vec3{0.2, -0.1, 0.15}, Vec3{0.0, 0.3, -0.2}}) {
      const double r2 = dot(x, x);
      const double ref = oracle::sphere_integral(
                             [&](const Vec3& y) {
                               const double d = distance(x, y);
                               return std::exp(y[2] + 0.5 * y[0]) * (1.0 - r2) / (d * d * d);
                             },
                             160, 320) /
                         (4.0 * oracle::pi);
      CHECK(evaluate_at(u, s, 0, x) == Approx(ref).epsilon(1e-9));
    }
  }
  SECTION("screened radial factor") {
    const auto gy = sample(s, [](const Vec3& x) { return oracle::real_ylm(3, -2, x); });
    const auto uh = solve_hsp_cavity(s, BoundaryDatum::from_values(s, lmax, gy), 1.3);
    const Vec3 x{0.1, 0.4, -0.3};
    const double r = norm(x);
    const double ref = oracle::sph_i(3, 1.3 * r) / oracle::sph_i(3, 1.3) * oracle::real_ylm(3, -2, (1.0 / r) * x);
    CHECK(evaluate_at(uh, s, 0, x) == Approx(ref).epsilon(1e-12));
  }
  CHECK_THROWS_AS(evaluate_at(u, s, 0, {0.0, 0.0, 1.5}), Error);
}

TEST_CASE("interior argument validation", "[interior]") {
  const std::vector<cavity::Atom> one{{{0.0, 0.0, 0.0}, 1.0, 1.0}};
  const auto s = cavity::build_surface(one, 26);
  CHECK_THROWS_AS(check_discretization(s, 5), Error);
  CHECK_NOTHROW(check_discretization(s, 3));
  CHECK_THROWS_AS(InteriorSolver(s, 5, Kind::laplace), Error);
  const InteriorSolver solver(s, 3, Kind::laplace);
  CHECK_THROWS_AS(solver.solve(std::vector<double>(5, 0.0)), Error);
  CHECK_THROWS_AS(solver.solve(BoundaryDatum::zeros(1, 2)), Error);
  CHECK_THROWS_AS(solver.solve(BoundaryDatum::zeros(2, 3)), Error);
}

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "catch_amalgamated.hpp"
#include "ddlpb/gmres.hpp"

using namespace ddlpb::linalg;

namespace {

LinearOperator dense_op(const Eigen::MatrixXd& a) {
  return [a](std::span<const double> x, std::span<double> y) {
    Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::Map<Eigen::VectorXd> yv(y.data(), static_cast<Eigen::Index>(y.size()));
    yv = a * xv;
  };
}

}  // namespace

TEST_CASE("GMRES matches a dense LU solve", "[gmres]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {1, 5, 40, 120}) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) += 0.5 * u(rng) / std::sqrt(static_cast<double>(n));
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) b(i) = u(rng);
    const Eigen::VectorXd ref = a.partialPivLu().solve(b);

    std::vector<double> x(static_cast<std::size_t>(n), 0.0);
    const auto res = gmres(dense_op(a), {b.data(), static_cast<std::size_t>(n)}, x, {10, 2000, 1e-12});
    CAPTURE(n);
    CHECK(res.converged);
    CHECK(res.rel_residual <= 1e-12);
    for (int i = 0; i < n; ++i) CHECK(std::abs(x[static_cast<std::size_t>(i)] - ref(i)) < 1e-9);
  }
}

TEST_CASE("GMRES on a zero right-hand side returns zero immediately", "[gmres]") {
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(4, 4) * 2.0;
  std::vector<double> b(4, 0.0), x{1.0, -2.0, 3.0, 0.5};
  const auto res = gmres(dense_op(a), b, x);
  CHECK(res.converged);
  CHECK(res.iterations == 0);
  for (double v : x) CHECK(v == 0.0);
}

TEST_CASE("GMRES warm start at the solution needs no iterations", "[gmres]") {
  const Eigen::MatrixXd a = Eigen::MatrixXd::Identity(3, 3) * 4.0;
  std::vector<double> b{4.0, 8.0, -4.0}, x{1.0, 2.0, -1.0};
  const auto res = gmres(dense_op(a), b, x);
  CHECK(res.converged);
  CHECK(res.iterations == 0);
}

TEST_CASE("GMRES reports non-convergence honestly", "[gmres]") {
  // Cyclic shift: Krylov space of e_1 needs all n directions.
  const int n = 50;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) a((i + 1) % n, i) = 1.0;
  std::vector<double> b(static_cast<std::size_t>(n), 0.0), x(static_cast<std::size_t>(n), 0.0);
  b[0] = 1.0;
  const auto res = gmres(dense_op(a), b, x, {5, 20, 1e-10});
  CHECK_FALSE(res.converged);
  CHECK(res.iterations == 20);
  CHECK(res.rel_residual > 1e-10);
}

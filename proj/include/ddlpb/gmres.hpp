#pragma once

#include <functional>
#include <span>

namespace ddlpb::linalg {

/// y = A x
using LinearOperator = std::function<void(std::span<const double> x, std::span<double> y)>;

struct GmresOptions {
  int restart = 30;
  int max_iter = 500;    // total inner iterations across restarts
  double rel_tol = 1e-8; // on ||b - A x|| / ||b||
};

struct GmresResult {
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

/// Restarted GMRES with modified Gram-Schmidt and Givens rotations.
/// x holds the initial guess on entry and the iterate on return.
GmresResult gmres(const LinearOperator& apply, std::span<const double> b, std::span<double> x,
                  const GmresOptions& opts = {});

}  // namespace ddlpb::linalg

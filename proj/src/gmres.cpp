#include "ddlpb/gmres.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "ddlpb/error.hpp"

namespace ddlpb::linalg {

namespace {

double nrm2(std::span<const double> v) { return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0)); }

}  // namespace

GmresResult gmres(const LinearOperator& apply, std::span<const double> b, std::span<double> x,
                  const GmresOptions& opts) {
  const std::size_t n = b.size();
  if (x.size() != n) throw Error("gmres: size mismatch between b and x");
  if (opts.restart < 1 || opts.max_iter < 1) throw Error("gmres: restart and max_iter must be positive");

  GmresResult res;
  const double bnorm = nrm2(b);
  if (bnorm == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    res.converged = true;
    return res;
  }

  const auto m = static_cast<std::size_t>(opts.restart);
  std::vector<std::vector<double>> V(m + 1, std::vector<double>(n));
  std::vector<double> H((m + 1) * m, 0.0);  // column-major, (m+1) x m
  std::vector<double> cs(m), sn(m), g(m + 1), w(n), y(m);
  auto h = [&](std::size_t i, std::size_t j) -> double& { return H[j * (m + 1) + i]; };

  while (true) {
    apply(x, w);
    for (std::size_t i = 0; i < n; ++i) V[0][i] = b[i] - w[i];
    double beta = nrm2(V[0]);
    res.rel_residual = beta / bnorm;
    if (res.rel_residual <= opts.rel_tol) {
      res.converged = true;
      return res;
    }
    if (res.iterations >= opts.max_iter) return res;

    for (auto& v : V[0]) v /= beta;
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = beta;

    std::size_t k = 0;
    for (; k < m && res.iterations < opts.max_iter; ++k) {
      ++res.iterations;
      apply(V[k], w);
      for (std::size_t i = 0; i <= k; ++i) {
        const double hik = std::inner_product(w.begin(), w.end(), V[i].begin(), 0.0);
        h(i, k) = hik;
        for (std::size_t t = 0; t < n; ++t) w[t] -= hik * V[i][t];
      }
      const double hnext = nrm2(w);
      h(k + 1, k) = hnext;
      if (hnext > 0.0) {
        for (std::size_t t = 0; t < n; ++t) V[k + 1][t] = w[t] / hnext;
      }
      for (std::size_t i = 0; i < k; ++i) {
        const double a = h(i, k), c = h(i + 1, k);
        h(i, k) = cs[i] * a + sn[i] * c;
        h(i + 1, k) = -sn[i] * a + cs[i] * c;
      }
      const double denom = std::hypot(h(k, k), h(k + 1, k));
      cs[k] = denom == 0.0 ? 1.0 : h(k, k) / denom;
      sn[k] = denom == 0.0 ? 0.0 : h(k + 1, k) / denom;
      h(k, k) = denom;
      h(k + 1, k) = 0.0;
      g[k + 1] = -sn[k] * g[k];
      g[k] = cs[k] * g[k];
      if (std::abs(g[k + 1]) / bnorm <= opts.rel_tol || hnext == 0.0) {
        ++k;
        break;
      }
    }

    // Back substitution on the k x k triangle, then update x.
    for (std::size_t ii = k; ii-- > 0;) {
      double s = g[ii];
      for (std::size_t j = ii + 1; j < k; ++j) s -= h(ii, j) * y[j];
      y[ii] = h(ii, ii) == 0.0 ? 0.0 : s / h(ii, ii);
    }
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t t = 0; t < n; ++t) x[t] += y[j] * V[j][t];
    }
  }
}

}  // namespace ddlpb::linalg

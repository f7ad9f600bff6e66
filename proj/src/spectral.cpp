#include "kirchhoff/spectral.hpp"

#include <cmath>
#include <limits>

#include "kirchhoff/kernels.hpp"

namespace kirchhoff {

GridFunction torsion(const Interval& domain) {
  return solve_poisson(make_grid_function(domain, 1.0), 0.0, 0.0);
}

namespace {

double eigen_residual_sup(const GridFunction& phi, double lambda) {
  const GridFunction lap = laplacian(phi);
  double r = 0.0;
  for (int i = 1; i < phi.size() - 1; ++i) {
    r = std::max(r, std::abs(-lap.values[i] - lambda * phi.values[i]));
  }
  return r;
}

}  // namespace

EigenPair principal_eigenpair(const Interval& domain, double tol) {
  if (!(tol > 0.0)) raise(ErrorCode::domain_error, "eigen tolerance must be > 0");
  const auto& k = kernels::active_ops();
  const double h = domain.h();
  // Applying the stencil to a unit-scale vector cannot resolve residuals much
  // below eps/h^2, so the nodewise stopping test is floored there.
  const double residual_floor =
      32.0 * std::numeric_limits<double>::epsilon() / (h * h);

  GridFunction x = make_grid_function(domain, 1.0);
  x.values.front() = 0.0;
  x.values.back() = 0.0;

  constexpr int kMaxIter = 10000;
  double lambda_prev = std::numeric_limits<double>::infinity();
  GridFunction phi = x;
  double lambda = 0.0;
  for (int iter = 1; iter <= kMaxIter; ++iter) {
    GridFunction y = solve_poisson(x, 0.0, 0.0);
    // (-Δ) y = x, so the Rayleigh quotient of y is (y·x)/(y·y).
    const double num = k.dot(y.values.data(), x.values.data(), y.values.size());
    const double den = k.dot(y.values.data(), y.values.data(), y.values.size());
    lambda = num / den;
    const double scale = k.sup_abs(y.values.data(), y.values.size());
    for (double& v : y.values) v /= scale;
    phi = y;
    x = y;
    if (std::abs(lambda - lambda_prev) <= tol &&
        eigen_residual_sup(phi, lambda) <= std::max(tol, residual_floor)) {
      double mean = 0.0;
      for (int i = 1; i < phi.size() - 1; ++i) mean += phi.values[i];
      if (mean < 0.0) {
        for (double& v : phi.values) v = -v;
      }
      const double sup = k.sup_abs(phi.values.data(), phi.values.size());
      for (double& v : phi.values) v /= sup;
      return EigenPair{lambda, phi, iter, eigen_residual_sup(phi, lambda)};
    }
    lambda_prev = lambda;
  }
  raise(ErrorCode::no_convergence,
        "inverse power iteration did not converge within 10000 iterations");
}

}  // namespace kirchhoff

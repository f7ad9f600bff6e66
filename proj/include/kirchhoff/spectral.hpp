#pragma once

#include "kirchhoff/grid.hpp"

namespace kirchhoff {

/// Principal Dirichlet eigenpair of -d2/dx2 on the grid: phi1 > 0 at interior
/// nodes, sup-normalized to 1; lambda1 is the discrete Rayleigh quotient of
/// the returned vector.
struct EigenPair {
  double lambda1 = 0.0;
  GridFunction phi1;
  int iterations = 0;
  double residual_sup = 0.0;  // sup |(-Δ phi) - lambda1 phi| over interior
};

/// Solution of -Δe = 1 with zero boundary values.
GridFunction torsion(const Interval& domain);

/// Inverse power iteration with the tridiagonal solver, deterministic
/// all-ones start. Stops when successive Rayleigh quotients differ by <= tol
/// and the nodewise eigen-residual is below max(tol, rounding floor of the
/// stencil). Throws NoConvergence after 10000 iterations.
EigenPair principal_eigenpair(const Interval& domain, double tol);

}  // namespace kirchhoff

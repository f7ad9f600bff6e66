#pragma once

#include "kirchhoff/grid.hpp"
#include "kirchhoff/kirchhoff_m.hpp"

namespace kirchhoff {

/// A parameter tuple for which the one-sided differential inequality between
/// u_low = sin(x) and u_high = rho x (pi - x) on (0, pi) holds at every node
/// while the pointwise order u_low <= u_high fails — a concrete refutation of
/// the comparison principle for the given M family.
struct CounterexampleWitness {
  double a = 0.0, b = 0.0, c = 0.0, p = 0.0;  // M(t) = a + b (t + c)^p
  double rho = 0.0;
  double condi_lhs = 0.0;    // M(pi/2)
  double condi_rhs = 0.0;    // 2 rho M(rho^2 pi^3 / 3)
  double condi_margin = 0.0; // rhs - lhs
  double order_violation_gap = 0.0;  // max (u_low - u_high), > 0 for a witness
  double order_violation_x = 0.0;
  bool pointwise_ok = false;         // differential inequality at all nodes
  double min_pointwise_margin = 0.0;
  double norm_gap_low = 0.0;   // |pi/2 - discrete energy of sin|
  double norm_gap_high = 0.0;  // |rho^2 pi^3/3 - discrete energy of the parabola|

  bool valid() const { return condi_margin >= 0.0 && order_violation_gap > 0.0; }
};

struct Case1SearchResult {
  CounterexampleWitness witness;
  int scalar_test_min_p = 0;  // least integer p with (8/pi^2)(32/(3 pi^2))^p > 1
};

struct Case2SearchResult {
  CounterexampleWitness witness;
  double b_threshold = 0.0;  // least b making the margin nonnegative at the found p
};

struct CondiResult {
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

/// max over (0, pi) of sin(x) / (x (pi - x)) by golden-section; equals 4/pi^2.
double rho_star();

/// The scalar comparison condition M(pi/2) <= 2 rho M(rho^2 pi^3 / 3).
CondiResult condi_check(const KirchhoffM& m, double rho);

/// Builds the sin / parabola pair on (0, pi) with n nodes, using the closed
/// forms of both Laplacians and both energies, confirms the differential
/// inequality nodewise, locates the worst order violation, and cross-checks
/// the closed-form energies against the grid quadrature.
CounterexampleWitness pointwise_verify(const KirchhoffM& m, double rho, int n);

/// Increasing family a + b t^p: least integer p (ties: least rho on a uniform
/// grid over (0, rho*)) giving a valid witness. Throws NoWitness if none.
Case1SearchResult search_case1(double b, int p_lo, int p_hi, int rho_grid,
                               double a = 1.0, int n = 4001);

/// Decreasing family a + b (t+c)^p, p < 0: least |p| in [p_lo, p_hi], then the
/// least b on a logarithmic grid, making the rearranged condition
/// a(1 - 2 rho) <= b (2 rho (rho^2 pi^3/3 + c)^p - (pi/2 + c)^p) hold.
Case2SearchResult search_case2(double a, double c, double rho, int p_lo,
                               int p_hi, int b_grid, int n = 4001);

}  // namespace kirchhoff

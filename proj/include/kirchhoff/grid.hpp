#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "kirchhoff/errors.hpp"

namespace kirchhoff {

/// Uniform 1D grid with both boundary nodes included: x_i = a + i*h,
/// i = 0..n-1, h = (b-a)/(n-1).
struct Interval {
  double a = 0.0;
  double b = 1.0;
  int n = 3;

  double h() const { return (b - a) / (n - 1); }
  double node(int i) const { return a + i * h(); }
  bool operator==(const Interval&) const = default;
};

/// Validates b > a, n >= 3, finite endpoints.
Interval make_interval(double a, double b, int n);

/// Nodal values over an Interval. Boundary Laplacian entries are defined as
/// zero and excluded from every verification loop.
struct GridFunction {
  Interval domain;
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double x(int i) const { return domain.node(i); }
  double sup_abs() const;
  double max_value() const;
};

GridFunction make_grid_function(const Interval& domain, double fill = 0.0);
GridFunction sample(const Interval& domain, const std::function<double(double)>& f);

/// Throws domain_error unless sizes match and all values are finite.
void validate(const GridFunction& u);

/// Central second difference scaled by 1/h^2 at interior nodes; 0 at the
/// boundary nodes.
GridFunction laplacian(const GridFunction& u);

/// Solves -(u_{i-1} - 2 u_i + u_{i+1})/h^2 = g_i at interior nodes with the
/// given Dirichlet values, by tridiagonal elimination plus iterative
/// refinement until the normwise relative residual of the linear system is
/// <= 1e-12. Only interior values of g are read.
GridFunction solve_poisson(const GridFunction& g, double bc_left, double bc_right);

/// Same system with the zeroth-order shift c >= 0: (-Δ + c) u = g.
GridFunction solve_shifted_poisson(const GridFunction& g, double shift_c,
                                   double bc_left, double bc_right);

/// Sum over i of (u_{i+1} - u_i)^2 / h — the squared difference-quotient
/// energy (midpoint rule on the first derivative).
double norm_sq_h1(const GridFunction& u);

/// Composite trapezoid of u over the domain.
double integrate(const GridFunction& u);

struct LeqResult {
  bool holds = false;
  int worst_node = 0;
  double worst_gap = 0.0;  // max_i (u_i - v_i), raw
};

/// Nodewise u <= v with absolute slack 1e-12; the reported gap is unslacked.
/// Throws domain_mismatch when the intervals differ.
LeqResult leq(const GridFunction& u, const GridFunction& v);

inline constexpr double kLeqSlack = 1e-12;
inline constexpr double kPoissonRelResidual = 1e-12;

/// CSV with header "x,value", one row per node, 17 significant digits.
void write_csv(std::ostream& out, const GridFunction& u);
GridFunction read_csv(std::istream& in);

}  // namespace kirchhoff

#pragma once

#include <functional>

#include "kirchhoff/kirchhoff_m.hpp"
#include "kirchhoff/subsuper.hpp"

namespace kirchhoff {

enum class Scheme { monotone_from_below, monotone_from_above, picard, shifted };

struct SolveConfig {
  double tol_step = 1e-10;      // sup-norm of successive iterates
  double tol_residual = 1e-8;   // sup-norm residual of the transformed problem
  int max_iter = 500;
  Scheme scheme = Scheme::picard;
  double shift_c = 0.0;  // 0 => estimated from the Lipschitz bound of f

  void validate() const;
};

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  GridFunction u;
  double r_value = 0.0;       // R(integral f(x,u)u)
  double mu = 0.0;            // M(r_value)
  double residual_sup = 0.0;  // of -Δu = f(x,u)/mu at interior nodes
  double self_consistency_gap = 0.0;  // |G(|u|^2) - integral f(x,u)u|
  bool in_interval = false;
};

using IterationObserver = std::function<void(int iter, const GridFunction& v)>;

/// Fixed-point iteration for -Δu = f(x, Tu)/M(R(Tu)) with T the nodewise
/// truncation onto [lower, upper]; truncation keeps every coefficient
/// evaluation inside the certified mu-range. Monotone schemes start at the
/// matching endpoint and require f nondecreasing on the interval's value
/// range; picard starts at the nodewise midpoint; shifted solves
/// (-Δ + c) v = f/mu + c*Tv with c large enough to make the right side
/// monotone in v. Requires verify_pair to pass (NotVerified otherwise).
/// Non-convergence is reported via converged = false, never thrown.
SolveReport solve_in_interval(const OrderInterval& pair, const KirchhoffM& m,
                              const Nonlinearity& f, const SolveConfig& cfg,
                              const IterationObserver& observer = {});

/// Semi-analytic solution of -M(|u|^2) Δu = fbar with fbar > 0 constant:
/// u = (fbar / M(s^2)) e with H(s) = fbar * |e| and e the torsion function.
GridFunction solve_constant_rhs(double fbar, const KirchhoffM& m,
                                const Interval& domain);

}  // namespace kirchhoff

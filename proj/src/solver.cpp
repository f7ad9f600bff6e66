#include "kirchhoff/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kirchhoff/kernels.hpp"
#include "kirchhoff/spectral.hpp"

namespace kirchhoff {

void SolveConfig::validate() const {
  if (!(tol_step > 0.0) || !(tol_residual > 0.0)) {
    raise(ErrorCode::invalid_config, "solver tolerances must be > 0");
  }
  if (max_iter < 1) raise(ErrorCode::invalid_config, "max_iter must be >= 1");
  if (shift_c < 0.0) raise(ErrorCode::invalid_config, "shift_c must be >= 0");
}

namespace {

const kernels::KernelOps& ops() { return kernels::active_ops(); }

GridFunction truncate(const GridFunction& v, const OrderInterval& pair) {
  GridFunction t = make_grid_function(v.domain);
  ops().clamp(v.values.data(), pair.lower.values.data(),
              pair.upper.values.data(), t.values.data(), v.values.size());
  return t;
}

double integral_fu(const Nonlinearity& f, const GridFunction& w) {
  GridFunction integrand = make_grid_function(w.domain);
  for (int i = 0; i < w.size(); ++i) {
    integrand.values[i] = eval_f(f, w.x(i), w.values[i]) * w.values[i];
  }
  return integrate(integrand);
}

// Sampled bound on max |d f / d u| over the interval's value range.
double lipschitz_estimate(const Nonlinearity& f, const OrderInterval& pair) {
  const double lo = *std::min_element(pair.lower.values.begin(), pair.lower.values.end());
  const double hi = *std::max_element(pair.upper.values.begin(), pair.upper.values.end());
  const int nx = 17, nu = 65;
  const double du = std::max(1e-8, (hi - lo) * 1e-7);
  double lip = 0.0;
  for (int ix = 0; ix < nx; ++ix) {
    const double x = pair.lower.domain.a +
                     (pair.lower.domain.b - pair.lower.domain.a) * ix / (nx - 1);
    for (int iu = 0; iu < nu; ++iu) {
      const double u = lo + (hi - lo) * iu / (nu - 1);
      const double ua = std::max(lo, u - du);
      const double ub = std::min(hi, u + du);
      if (ub <= ua) continue;
      lip = std::max(lip, std::abs(eval_f(f, x, ub) - eval_f(f, x, ua)) / (ub - ua));
    }
  }
  return lip;
}

}  // namespace

SolveReport solve_in_interval(const OrderInterval& pair, const KirchhoffM& m,
                              const Nonlinearity& f, const SolveConfig& cfg,
                              const IterationObserver& observer) {
  cfg.validate();
  const PairReport pre = verify_pair(pair, m, f);
  if (!pre.ok) {
    raise(ErrorCode::not_verified,
          "pair fails verification (worst super margin " +
              std::to_string(pre.worst_super_margin) + ", worst sub margin " +
              std::to_string(pre.worst_sub_margin) + ")");
  }

  const Interval domain = pair.lower.domain;
  const double value_lo =
      *std::min_element(pair.lower.values.begin(), pair.lower.values.end());
  const double value_hi =
      *std::max_element(pair.upper.values.begin(), pair.upper.values.end());

  if (cfg.scheme == Scheme::monotone_from_below ||
      cfg.scheme == Scheme::monotone_from_above) {
    if (!f_nondecreasing_on(f, value_lo, value_hi)) {
      raise(ErrorCode::invalid_config,
            "monotone schemes require f nondecreasing in u on the interval's value range");
    }
    // With M increasing the coefficient moves against the iterates (larger v,
    // larger R, larger mu, smaller f/mu), which breaks the ordering; the
    // monotone schemes are only offered when M is nonincreasing.
    if (!m.classification().m1_nonincreasing) {
      raise(ErrorCode::invalid_config,
            "monotone schemes require a nonincreasing (or constant) M; use picard or shifted");
    }
  }

  double shift = 0.0;
  if (cfg.scheme == Scheme::shifted) {
    shift = cfg.shift_c > 0.0 ? cfg.shift_c
                              : 1.1 * lipschitz_estimate(f, pair) / m.m0();
  }

  GridFunction v = make_grid_function(domain);
  switch (cfg.scheme) {
    case Scheme::monotone_from_below:
      v = pair.lower;
      break;
    case Scheme::monotone_from_above:
      v = pair.upper;
      break;
    case Scheme::picard:
    case Scheme::shifted:
      for (int i = 0; i < domain.n; ++i) {
        v.values[i] = 0.5 * (pair.lower.values[i] + pair.upper.values[i]);
      }
      break;
  }

  SolveReport rep;
  bool step_converged = false;
  int iter = 0;
  while (iter < cfg.max_iter) {
    ++iter;
    const GridFunction tv = truncate(v, pair);
    const double s = integral_fu(f, tv);
    const double mu = m.eval_M(m.invert_G(s));

    GridFunction rhs = make_grid_function(domain);
    for (int i = 1; i < domain.n - 1; ++i) {
      rhs.values[i] = eval_f(f, tv.x(i), tv.values[i]) / mu + shift * tv.values[i];
    }
    GridFunction next = shift > 0.0 ? solve_shifted_poisson(rhs, shift, 0.0, 0.0)
                                    : solve_poisson(rhs, 0.0, 0.0);
    const double step =
        ops().sup_abs_diff(next.values.data(), v.values.data(), next.values.size());
    v = std::move(next);
    if (observer) observer(iter, v);
    if (step <= cfg.tol_step) {
      step_converged = true;
      break;
    }
  }

  rep.iterations = iter;
  rep.u = v;
  rep.in_interval = leq(pair.lower, v).holds && leq(v, pair.upper).holds;

  // Diagnostics evaluate f on the truncated iterate so fractional powers stay
  // inside their domain even when v undershoots the interval by rounding.
  const GridFunction tu = truncate(v, pair);
  const double s_final = integral_fu(f, tu);
  rep.r_value = m.invert_G(s_final);
  rep.mu = m.eval_M(rep.r_value);

  const GridFunction lap = laplacian(v);
  double res = 0.0;
  for (int i = 1; i < domain.n - 1; ++i) {
    res = std::max(res, std::abs(-lap.values[i] -
                                 eval_f(f, tu.x(i), tu.values[i]) / rep.mu));
  }
  rep.residual_sup = res;
  rep.self_consistency_gap = std::abs(m.eval_G(norm_sq_h1(v)) - s_final);
  rep.converged =
      step_converged && rep.residual_sup <= cfg.tol_residual && rep.in_interval;
  return rep;
}

GridFunction solve_constant_rhs(double fbar, const KirchhoffM& m,
                                const Interval& domain) {
  if (!(fbar > 0.0)) raise(ErrorCode::domain_error, "constant source must be > 0");
  const GridFunction e = torsion(domain);
  const double norm_e = std::sqrt(norm_sq_h1(e));
  const double s = m.invert_H(fbar * norm_e);
  const double coeff = fbar / m.eval_M(s * s);
  GridFunction u = e;
  for (double& v : u.values) v *= coeff;
  return u;
}

}  // namespace kirchhoff

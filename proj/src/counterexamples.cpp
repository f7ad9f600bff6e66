#include "kirchhoff/counterexamples.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kirchhoff/optimize.hpp"

namespace kirchhoff {

namespace {

constexpr double kPi = std::numbers::pi;

double pair_ratio(double x) { return std::sin(x) / (x * (kPi - x)); }

// rho strictly inside (0, rho*): candidates keep a small standoff from both
// ends so the order violation is genuine.
constexpr double kRhoStandoff = 1e-6;

}  // namespace

double rho_star() {
  // The ratio is symmetric about pi/2 and unimodal on (0, pi).
  return golden_max(pair_ratio, 0.1, kPi - 0.1, 1e-12).value;
}

CondiResult condi_check(const KirchhoffM& m, double rho) {
  if (!(rho > 0.0)) raise(ErrorCode::domain_error, "condi_check requires rho > 0");
  CondiResult r;
  r.lhs = m.eval_M(kPi / 2.0);
  r.rhs = 2.0 * rho * m.eval_M(rho * rho * kPi * kPi * kPi / 3.0);
  r.margin = r.rhs - r.lhs;
  r.holds = r.margin >= 0.0;
  return r;
}

CounterexampleWitness pointwise_verify(const KirchhoffM& m, double rho, int n) {
  if (!(rho > 0.0)) raise(ErrorCode::domain_error, "rho must be > 0");
  const Interval domain = make_interval(0.0, kPi, n);

  CounterexampleWitness w;
  w.a = m.param_a();
  w.b = m.param_b();
  w.c = m.param_c();
  w.p = m.param_p();
  w.rho = rho;

  const CondiResult condi = condi_check(m, rho);
  w.condi_lhs = condi.lhs;
  w.condi_rhs = condi.rhs;
  w.condi_margin = condi.margin;

  // u_low = sin x, u_high = rho x (pi - x): -Δ u_low = sin x, -Δ u_high = 2 rho,
  // |u_low|^2 = pi/2, |u_high|^2 = rho^2 pi^3 / 3.
  const double m_low = m.eval_M(kPi / 2.0);
  const double m_high = m.eval_M(rho * rho * kPi * kPi * kPi / 3.0);

  GridFunction u_low = sample(domain, [](double x) { return std::sin(x); });
  GridFunction u_high =
      sample(domain, [rho](double x) { return rho * x * (kPi - x); });

  double min_margin = std::numeric_limits<double>::infinity();
  double gap = -std::numeric_limits<double>::infinity();
  int gap_node = 0;
  for (int i = 0; i < n; ++i) {
    const double margin = m_high * 2.0 * rho - m_low * std::sin(domain.node(i));
    min_margin = std::min(min_margin, margin);
    const double d = u_low.values[i] - u_high.values[i];
    if (d > gap) {
      gap = d;
      gap_node = i;
    }
  }
  w.pointwise_ok = min_margin >= 0.0;
  w.min_pointwise_margin = min_margin;
  w.order_violation_gap = gap;
  w.order_violation_x = domain.node(gap_node);

  w.norm_gap_low = std::abs(kPi / 2.0 - norm_sq_h1(u_low));
  w.norm_gap_high =
      std::abs(rho * rho * kPi * kPi * kPi / 3.0 - norm_sq_h1(u_high));
  return w;
}

Case1SearchResult search_case1(double b, int p_lo, int p_hi, int rho_grid,
                               double a, int n) {
  if (!(b > 0.0)) raise(ErrorCode::domain_error, "case 1 requires b > 0");
  if (rho_grid < 2) raise(ErrorCode::domain_error, "rho_grid must be >= 2");

  Case1SearchResult result;
  result.scalar_test_min_p = 0;
  for (int p = 1; p <= 64; ++p) {
    const double v = (8.0 / (kPi * kPi)) *
                     std::pow(32.0 / (3.0 * kPi * kPi), static_cast<double>(p));
    if (v > 1.0) {
      result.scalar_test_min_p = p;
      break;
    }
  }

  const double rs = rho_star();
  const double rho_lo = kRhoStandoff;
  const double rho_hi = rs - kRhoStandoff;
  for (int p = p_lo; p <= p_hi; ++p) {
    const KirchhoffM m = KirchhoffM::power_shift(a, b, 0.0, static_cast<double>(p));
    for (int k = 0; k < rho_grid; ++k) {
      const double rho = rho_lo + (rho_hi - rho_lo) * k / (rho_grid - 1);
      if (!condi_check(m, rho).holds) continue;
      CounterexampleWitness w = pointwise_verify(m, rho, n);
      if (w.valid() && w.pointwise_ok) {
        result.witness = w;
        return result;
      }
    }
  }
  raise(ErrorCode::no_witness,
        "no (p, rho) in the searched range satisfies the comparison condition "
        "while violating the order");
}

Case2SearchResult search_case2(double a, double c, double rho, int p_lo,
                               int p_hi, int b_grid, int n) {
  if (!(a > 0.0) || !(c > 0.0)) {
    raise(ErrorCode::domain_error, "case 2 requires a > 0 and c > 0");
  }
  if (!(rho > 0.0 && rho < 0.5)) {
    raise(ErrorCode::domain_error, "case 2 requires 0 < rho < 1/2");
  }
  if (p_hi > -1 || p_lo > p_hi) {
    raise(ErrorCode::domain_error, "case 2 scans negative integer p (p_lo <= p_hi <= -1)");
  }
  if (b_grid < 2) raise(ErrorCode::domain_error, "b_grid must be >= 2");
  if (rho >= rho_star()) {
    raise(ErrorCode::no_witness,
          "rho >= 4/pi^2: sin stays below the parabola, no order violation exists");
  }

  const double tau = rho * rho * kPi * kPi * kPi / 3.0 + c;
  const double sigma = kPi / 2.0 + c;
  constexpr double kBLo = 1e-2, kBHi = 1e8;

  // Scan |p| ascending; the condition is linear in b, so each p has a closed
  // threshold b* = a(1 - 2 rho) / coef when coef > 0.
  for (int p = p_hi; p >= p_lo; --p) {
    const double pd = static_cast<double>(p);
    const double coef = 2.0 * rho * std::pow(tau, pd) - std::pow(sigma, pd);
    if (coef <= 0.0) continue;
    const double b_star = a * (1.0 - 2.0 * rho) / coef;
    if (b_star > kBHi) continue;
    double b_sel = kBHi;
    for (int k = 0; k < b_grid; ++k) {
      const double bk = kBLo * std::pow(kBHi / kBLo, static_cast<double>(k) / (b_grid - 1));
      if (bk >= b_star) {
        b_sel = bk;
        break;
      }
    }
    const KirchhoffM m = KirchhoffM::power_shift(a, b_sel, c, pd);
    CounterexampleWitness w = pointwise_verify(m, rho, n);
    if (w.valid() && w.pointwise_ok) {
      return Case2SearchResult{w, b_star};
    }
  }
  raise(ErrorCode::no_witness,
        "2 rho > ((pi/2 + c)/(rho^2 pi^3/3 + c))^p is unattainable for p in range");
}

}  // namespace kirchhoff

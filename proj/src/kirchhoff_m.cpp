#include "kirchhoff/kirchhoff_m.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace kirchhoff {

namespace {

// Merged linear + logarithmic abscissae over [0, scan_max].
std::vector<double> scan_points(double scan_max, int samples) {
  const int n_lin = samples / 2;
  const int n_log = samples - n_lin;
  std::vector<double> ts;
  ts.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i < n_lin; ++i) {
    ts.push_back(scan_max * static_cast<double>(i) / (n_lin - 1));
  }
  const double t_lo = scan_max * 1e-12;
  for (int i = 0; i < n_log; ++i) {
    const double frac = static_cast<double>(i) / (n_log - 1);
    ts.push_back(t_lo * std::pow(scan_max / t_lo, frac));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

struct TrendFlags {
  bool nonincreasing = true;
  bool nondecreasing = true;
  bool strictly_increasing = true;
  bool strictly_decreasing = true;
};

TrendFlags trend(const std::vector<double>& v) {
  TrendFlags t;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double d = v[i + 1] - v[i];
    if (d > 0.0) {
      t.nonincreasing = false;
      t.strictly_decreasing = false;
    } else if (d < 0.0) {
      t.nondecreasing = false;
      t.strictly_increasing = false;
    } else {
      t.strictly_increasing = false;
      t.strictly_decreasing = false;
    }
  }
  return t;
}

}  // namespace

KirchhoffM KirchhoffM::power_shift(double a, double b, double c, double p,
                                   double scan_max) {
  if (!(a >= 0.0) || !(b > 0.0) || !(c >= 0.0)) {
    raise(ErrorCode::invalid_config,
          "power_shift family requires a >= 0, b > 0, c >= 0");
  }
  if (p < 0.0 && !(c > 0.0)) {
    raise(ErrorCode::invalid_config,
          "power_shift with p < 0 requires c > 0 so M is finite at t = 0");
  }
  KirchhoffM m;
  m.family_ = Family::power_shift;
  m.a_ = a;
  m.b_ = b;
  m.c_ = c;
  m.p_ = p;
  m.scan_max_ = scan_max;
  m.finish_construction();
  return m;
}

KirchhoffM KirchhoffM::constant(double value, double scan_max) {
  if (!(value > 0.0)) {
    raise(ErrorCode::invalid_config, "constant family requires m > 0");
  }
  KirchhoffM m;
  m.family_ = Family::constant;
  m.a_ = value;
  m.scan_max_ = scan_max;
  m.finish_construction();
  return m;
}

KirchhoffM KirchhoffM::custom(std::function<double(double)> fn, double scan_max) {
  KirchhoffM m;
  m.family_ = Family::custom;
  m.fn_ = std::move(fn);
  m.scan_max_ = scan_max;
  m.finish_construction();
  return m;
}

void KirchhoffM::finish_construction() {
  if (!(scan_max_ > 0.0)) {
    raise(ErrorCode::invalid_config, "scan_max must be > 0");
  }
  cls_ = classify(kDefaultSamples);
  if (!cls_.m0_positive) {
    raise(ErrorCode::invalid_config,
          "M must stay positive on the scan range (found m0 = " +
              std::to_string(cls_.m0) + ")");
  }
  g_table_ = GInversionTable{scan_max_, cls_.g_direction, kInvertTol};
}

double KirchhoffM::eval_M(double t) const {
  if (t < 0.0) raise(ErrorCode::domain_error, "M is defined for t >= 0");
  switch (family_) {
    case Family::constant:
      return a_;
    case Family::power_shift: {
      if (t + c_ <= 0.0 && p_ < 0.0) {
        raise(ErrorCode::domain_error, "M(t) undefined: t + c <= 0 with p < 0");
      }
      return a_ + b_ * std::pow(t + c_, p_);
    }
    case Family::custom:
      return fn_(t);
  }
  raise(ErrorCode::invalid_config, "KirchhoffM has no family");
}

double KirchhoffM::eval_G(double t) const { return eval_M(t) * t; }

double KirchhoffM::eval_H(double t) const {
  if (t < 0.0) raise(ErrorCode::domain_error, "H is used for t >= 0 only");
  return eval_M(t * t) * t;
}

Classification KirchhoffM::classify(int samples) const {
  if (samples < 2) raise(ErrorCode::domain_error, "classify requires samples >= 2");
  const std::vector<double> ts = scan_points(scan_max_, samples);

  std::vector<double> m_vals, g_vals, h_vals;
  m_vals.reserve(ts.size());
  g_vals.reserve(ts.size());
  h_vals.reserve(ts.size());
  double m0 = std::numeric_limits<double>::infinity();
  for (double t : ts) {
    const double mv = eval_M(t);
    m_vals.push_back(mv);
    g_vals.push_back(mv * t);
    h_vals.push_back(eval_M(t * t) * t);
    m0 = std::min(m0, mv);
  }

  Classification c;
  c.m0 = m0;
  c.m0_positive = std::isfinite(m0) && m0 > 0.0;

  TrendFlags tm = trend(m_vals);
  if (family_ == Family::power_shift) {
    // d/dt M = b p (t+c)^{p-1}: sign of p decides, b > 0.
    tm.nonincreasing = p_ <= 0.0;
    tm.nondecreasing = p_ >= 0.0;
    tm.strictly_increasing = p_ > 0.0;
    tm.strictly_decreasing = p_ < 0.0;
  } else if (family_ == Family::constant) {
    tm = TrendFlags{true, true, false, false};
  }
  c.m1_nonincreasing = tm.nonincreasing;
  c.m2_nondecreasing = tm.nondecreasing;
  c.m2_strictly_increasing = tm.strictly_increasing;

  const TrendFlags tg = trend(g_vals);
  const bool g_inc_analytic =
      (family_ == Family::constant) ||
      (family_ == Family::power_shift && p_ >= 0.0);
  if (g_inc_analytic || tg.strictly_increasing) {
    c.g_direction = 1;
  } else if (tg.strictly_decreasing) {
    c.g_direction = -1;
  } else {
    c.g_direction = 0;
  }
  c.m3_invertible = c.g_direction != 0;

  const TrendFlags th = trend(h_vals);
  c.h_increasing = g_inc_analytic || th.strictly_increasing;
  return c;
}

Monotonicity KirchhoffM::monotonicity() const {
  if (cls_.m2_strictly_increasing) return Monotonicity::increasing;
  if (cls_.m1_nonincreasing) return Monotonicity::nonincreasing;
  if (cls_.m2_nondecreasing) return Monotonicity::increasing;
  return Monotonicity::unknown;
}

double KirchhoffM::invert_monotone(const std::function<double(double)>& g,
                                   int direction, double s,
                                   const char* what) const {
  if (direction == 0) {
    raise(ErrorCode::non_monotone,
          std::string(what) + " is not monotone on the scan range; cannot invert");
  }
  const double sgn = static_cast<double>(direction);
  const double g0 = g(0.0);
  const double tol = std::max(kInvertTol, kInvertTol * std::abs(s));
  if (std::abs(s - g0) <= tol) return 0.0;
  if (sgn * (s - g0) < -tol) {
    raise(ErrorCode::out_of_range,
          std::string(what) + " inversion target " + std::to_string(s) +
              " lies below the attainable range (G(0) = " + std::to_string(g0) + ")");
  }

  double hi = g_table_.t_max;
  double prev = g(hi);
  while (sgn * (s - prev) > tol && hi < kBracketCap) {
    const double next_hi = std::min(hi * 2.0, kBracketCap);
    const double next_val = g(next_hi);
    if (sgn * (next_val - prev) < 0.0) {
      raise(ErrorCode::non_monotone,
            std::string(what) + " stops being monotone past the scan range");
    }
    hi = next_hi;
    prev = next_val;
  }
  if (sgn * (s - prev) > tol) {
    raise(ErrorCode::out_of_range,
          std::string(what) + " inversion target " + std::to_string(s) +
              " is not attained below the bracket cap " + std::to_string(kBracketCap));
  }

  double lo = 0.0;
  double best_t = lo;
  double best_gap = std::abs(g0 - s);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double val = g(mid);
    const double gap = std::abs(val - s);
    if (gap < best_gap) {
      best_gap = gap;
      best_t = mid;
    }
    if (gap <= tol) return mid;
    if (sgn * (val - s) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::numeric_limits<double>::epsilon() * std::max(1.0, hi)) {
      break;
    }
  }
  return best_t;
}

double KirchhoffM::invert_G(double s) const {
  return invert_monotone([this](double t) { return eval_G(t); },
                         g_table_.direction, s, "G");
}

double KirchhoffM::invert_H(double s) const {
  if (!cls_.h_increasing) {
    raise(ErrorCode::non_monotone, "H is not increasing on the scan range; cannot invert");
  }
  return invert_monotone([this](double t) { return eval_H(t); }, 1, s, "H");
}

std::string KirchhoffM::family_name() const {
  switch (family_) {
    case Family::power_shift: return "power_shift";
    case Family::constant: return "constant";
    case Family::custom: return "custom";
  }
  return "?";
}

double nonlocal_R(const KirchhoffM& m, const Nonlinearity& f, const GridFunction& w) {
  GridFunction integrand = make_grid_function(w.domain);
  for (int i = 0; i < w.size(); ++i) {
    integrand.values[i] = eval_f(f, w.x(i), w.values[i]) * w.values[i];
  }
  const double s = integrate(integrand);
  const double g0 = m.eval_G(0.0);
  const int dir = m.classification().g_direction;
  const double tol = std::max(KirchhoffM::kInvertTol, KirchhoffM::kInvertTol * std::abs(s));
  if (dir != 0 && dir * (s - g0) < -tol) {
    raise(ErrorCode::negative_mass,
          "integral of f(x,w)w = " + std::to_string(s) +
              " falls below G(0) = " + std::to_string(g0) +
              "; the nonlocal operator is undefined there");
  }
  return m.invert_G(s);
}

}  // namespace kirchhoff

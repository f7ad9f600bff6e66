#include "kirchhoff/subsuper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kirchhoff/optimize.hpp"

namespace kirchhoff {

namespace {

struct Envelope {
  double lo = 0.0;
  double hi = 0.0;
};

// Extremes of g(s) = f(x,s)s over [lo, hi] at one node.
Envelope node_envelope(const Nonlinearity& f, double x, double lo, double hi,
                       int samples) {
  const auto g = [&](double s) { return eval_f(f, x, s) * s; };
  if (lo == hi) {
    const double v = g(lo);
    return {v, v};
  }
  const MonotoneHint hint = product_trend_on(f, lo, hi);
  if (hint == MonotoneHint::nondecreasing) return {g(lo), g(hi)};
  if (hint == MonotoneHint::nonincreasing) return {g(hi), g(lo)};

  // Dense scan, then refine around the best sample. The refined value is
  // merged with the sampled one so the envelope never shrinks below what the
  // scan already established.
  double best_max = -std::numeric_limits<double>::infinity();
  double best_min = std::numeric_limits<double>::infinity();
  int arg_max = 0, arg_min = 0;
  const double step = (hi - lo) / (samples - 1);
  for (int j = 0; j < samples; ++j) {
    const double s = (j == samples - 1) ? hi : lo + j * step;
    const double v = g(s);
    if (v > best_max) {
      best_max = v;
      arg_max = j;
    }
    if (v < best_min) {
      best_min = v;
      arg_min = j;
    }
  }
  const double xtol = 1e-12 * std::max(1.0, std::abs(hi));
  const auto bracket = [&](int j) {
    const double a = std::max(lo, lo + (j - 1) * step);
    const double b = std::min(hi, lo + (j + 1) * step);
    return std::pair<double, double>{a, b};
  };
  const auto [ma, mb] = bracket(arg_max);
  best_max = std::max(best_max, golden_max(g, ma, mb, xtol).value);
  const auto [na, nb] = bracket(arg_min);
  best_min = std::min(best_min, golden_min(g, na, nb, xtol).value);
  return {best_min, best_max};
}

double map_through_R(const KirchhoffM& m, double s) { return m.invert_G(s); }

}  // namespace

void validate_pair(const OrderInterval& pair) {
  const LeqResult order = leq(pair.lower, pair.upper);
  if (!order.holds) {
    raise(ErrorCode::order_violated,
          "lower exceeds upper by " + std::to_string(order.worst_gap) +
              " at node " + std::to_string(order.worst_node));
  }
  const int last = pair.lower.size() - 1;
  for (int i : {0, last}) {
    if (pair.lower.values[i] > kLeqSlack || pair.upper.values[i] < -kLeqSlack) {
      raise(ErrorCode::boundary_violated,
            "boundary nodes require lower <= 0 <= upper (node " +
                std::to_string(i) + ")");
    }
  }
}

MRange m_range_over_interval(const OrderInterval& pair, const KirchhoffM& m,
                             const Nonlinearity& f, int samples_per_node) {
  if (samples_per_node < 2) {
    raise(ErrorCode::domain_error, "samples_per_node must be >= 2");
  }
  validate_pair(pair);
  const GridFunction& lo = pair.lower;
  const GridFunction& hi = pair.upper;

  GridFunction env_min = make_grid_function(lo.domain);
  GridFunction env_max = make_grid_function(lo.domain);
  for (int i = 0; i < lo.size(); ++i) {
    const Envelope e =
        node_envelope(f, lo.x(i), lo.values[i], hi.values[i], samples_per_node);
    env_min.values[i] = e.lo;
    env_max.values[i] = e.hi;
  }
  MRange r;
  r.s_min = integrate(env_min);
  r.s_max = integrate(env_max);

  const double g0 = m.eval_G(0.0);
  const int dir = m.classification().g_direction;
  if (dir == 0) {
    raise(ErrorCode::non_monotone, "G is not monotone; mu-range is undefined");
  }
  const double s_low_end = dir > 0 ? r.s_min : r.s_max;
  if (dir * (s_low_end - g0) < -KirchhoffM::kInvertTol * std::max(1.0, std::abs(s_low_end))) {
    raise(ErrorCode::negative_mass,
          "integral range [" + std::to_string(r.s_min) + ", " +
              std::to_string(r.s_max) + "] falls below G(0) = " +
              std::to_string(g0) + "; the nonlocal operator is undefined on part of the interval");
  }

  const double t_a = map_through_R(m, r.s_min);
  const double t_b = map_through_R(m, r.s_max);
  const double t_lo = std::min(t_a, t_b);
  const double t_hi = std::max(t_a, t_b);

  switch (m.monotonicity()) {
    case Monotonicity::increasing:
      r.mu_min = m.eval_M(t_lo);
      r.mu_max = m.eval_M(t_hi);
      break;
    case Monotonicity::nonincreasing:
      r.mu_min = m.eval_M(t_hi);
      r.mu_max = m.eval_M(t_lo);
      break;
    case Monotonicity::unknown: {
      // No usable tag: sample M over [t_lo, t_hi] including the endpoints.
      constexpr int kMuSamples = 257;
      double lo_v = std::numeric_limits<double>::infinity();
      double hi_v = -std::numeric_limits<double>::infinity();
      for (int j = 0; j < kMuSamples; ++j) {
        const double t = t_lo + (t_hi - t_lo) * j / (kMuSamples - 1);
        const double v = m.eval_M(t);
        lo_v = std::min(lo_v, v);
        hi_v = std::max(hi_v, v);
      }
      r.mu_min = lo_v;
      r.mu_max = hi_v;
      break;
    }
  }
  if (r.mu_min > r.mu_max) std::swap(r.mu_min, r.mu_max);
  return r;
}

PairReport verify_pair_with_mu(const OrderInterval& pair, const Nonlinearity& f,
                               const MRange& range) {
  validate_pair(pair);
  const GridFunction& lo = pair.lower;
  const GridFunction& hi = pair.upper;
  const int n = lo.size();

  GridFunction neg_lap_hi = pair.upper_neg_laplacian
                                ? *pair.upper_neg_laplacian
                                : laplacian(hi);
  GridFunction neg_lap_lo = pair.lower_neg_laplacian
                                ? *pair.lower_neg_laplacian
                                : laplacian(lo);
  if (!pair.upper_neg_laplacian) {
    for (double& v : neg_lap_hi.values) v = -v;
  }
  if (!pair.lower_neg_laplacian) {
    for (double& v : neg_lap_lo.values) v = -v;
  }

  PairReport rep;
  rep.m_range = range;
  rep.super_margin = make_grid_function(lo.domain);
  rep.sub_margin = make_grid_function(lo.domain);
  double worst_super = std::numeric_limits<double>::infinity();
  double worst_sub = std::numeric_limits<double>::infinity();
  for (int i = 1; i < n - 1; ++i) {
    const double x = lo.x(i);

    const double Lhi = neg_lap_hi.values[i];
    const double mu_super = Lhi >= 0.0 ? range.mu_min : range.mu_max;
    const double ms = mu_super * Lhi - eval_f(f, x, hi.values[i]);
    rep.super_margin.values[i] = ms;
    if (ms < worst_super) {
      worst_super = ms;
      rep.worst_super_node = i;
    }

    const double Llo = neg_lap_lo.values[i];
    const double mu_sub = Llo >= 0.0 ? range.mu_max : range.mu_min;
    const double mb = eval_f(f, x, lo.values[i]) - mu_sub * Llo;
    rep.sub_margin.values[i] = mb;
    if (mb < worst_sub) {
      worst_sub = mb;
      rep.worst_sub_node = i;
    }
  }
  rep.worst_super_margin = worst_super;
  rep.worst_sub_margin = worst_sub;
  rep.ok = worst_super >= -kMarginSlack && worst_sub >= -kMarginSlack;
  return rep;
}

PairReport verify_pair(const OrderInterval& pair, const KirchhoffM& m,
                       const Nonlinearity& f, int samples_per_node) {
  const MRange range = m_range_over_interval(pair, m, f, samples_per_node);
  return verify_pair_with_mu(pair, f, range);
}

}  // namespace kirchhoff

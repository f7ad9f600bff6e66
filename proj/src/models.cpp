#include "kirchhoff/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kirchhoff/optimize.hpp"

namespace kirchhoff {

namespace {

constexpr double kEpsFloor = 1e-14;
constexpr double kEigenTol = 1e-12;

struct Fields {
  GridFunction e;
  EigenPair eigen;
  double sup_e;
  double phi_min_interior;
  double ratio_e_over_phi;  // min over interior of e / phi1
};

Fields build_fields(const Interval& domain) {
  Fields fl{torsion(domain), principal_eigenpair(domain, kEigenTol), 0.0, 0.0, 0.0};
  fl.sup_e = fl.e.max_value();
  double phi_min = std::numeric_limits<double>::infinity();
  double ratio = std::numeric_limits<double>::infinity();
  for (int i = 1; i < domain.n - 1; ++i) {
    phi_min = std::min(phi_min, fl.eigen.phi1.values[i]);
    ratio = std::min(ratio, fl.e.values[i] / fl.eigen.phi1.values[i]);
  }
  fl.phi_min_interior = phi_min;
  fl.ratio_e_over_phi = ratio;
  return fl;
}

GridFunction scaled(const GridFunction& u, double c) {
  GridFunction v = u;
  for (double& x : v.values) x *= c;
  return v;
}

OrderInterval make_pair_eps_K(const Fields& fl, double eps, double K) {
  OrderInterval pair;
  pair.lower = scaled(fl.eigen.phi1, eps);
  pair.upper = scaled(fl.e, K);
  // -Δ(eps phi1) = lambda1 eps phi1 and -Δ(K e) = K hold exactly for the
  // discrete operator.
  pair.lower_neg_laplacian = scaled(fl.eigen.phi1, eps * fl.eigen.lambda1);
  pair.upper_neg_laplacian = make_grid_function(fl.e.domain, K);
  return pair;
}

PairConstruction finish(PairConstruction pc, const KirchhoffM& m) {
  const PairReport rep = verify_pair(pc.pair, m, pc.f);
  if (!rep.ok) {
    raise(ErrorCode::not_verified,
          "constructed pair unexpectedly fails verification (worst margins " +
              std::to_string(rep.worst_super_margin) + ", " +
              std::to_string(rep.worst_sub_margin) + ")");
  }
  pc.feasible = true;
  return pc;
}

}  // namespace

PairConstruction build_pair_sublinear(double lambda, double q,
                                      const KirchhoffM& m, const Interval& domain) {
  if (!(q > 0.0 && q < 1.0)) {
    raise(ErrorCode::invalid_config, "sublinear model requires 0 < q < 1");
  }
  if (!(lambda > 0.0)) {
    raise(ErrorCode::no_positive_solution,
          "no positive solution exists for lambda <= 0");
  }
  const Fields fl = build_fields(domain);
  const double m0 = m.m0();

  const double k_threshold =
      std::pow(lambda * std::pow(fl.sup_e, q) / m0, 1.0 / (1.0 - q));
  const double K = k_threshold * (1.0 + 1e-9);

  PairConstruction pc;
  pc.f = Nonlinearity::sublinear(lambda, q);
  pc.K = K;
  pc.eigen = fl.eigen;
  pc.threshold_info.k_threshold = k_threshold;

  for (double eps = K * fl.ratio_e_over_phi; eps >= kEpsFloor; eps *= 0.5) {
    OrderInterval pair = make_pair_eps_K(fl, eps, K);
    if (!leq(pair.lower, pair.upper).holds) continue;
    const MRange mr = m_range_over_interval(pair, m, pc.f);
    if (mr.mu_max * fl.eigen.lambda1 * std::pow(eps, 1.0 - q) <= lambda) {
      pc.pair = std::move(pair);
      pc.epsilon = eps;
      pc.mu_max_used = mr.mu_max;
      return finish(std::move(pc), m);
    }
  }
  raise(ErrorCode::no_epsilon,
        "no eps >= 1e-14 closes the subsolution inequality");
}

PairConstruction build_pair_concave_convex(double lambda, double q, double p,
                                           const KirchhoffM& m,
                                           const Interval& domain) {
  if (!(q > 0.0 && q < 1.0 && p > 1.0)) {
    raise(ErrorCode::invalid_config, "concave-convex model requires 0 < q < 1 < p");
  }
  if (!(lambda > 0.0)) {
    raise(ErrorCode::no_positive_solution,
          "the construction needs lambda > 0");
  }
  const Fields fl = build_fields(domain);
  const double m0 = m.m0();
  const double E = fl.sup_e;

  // Admissibility: m0 K^{1-q} >= lambda E^q + K^{p-q} E^p for some K > 0;
  // lambda0 is the best possible lambda, maximized over log K. The window is
  // centered on the stationary point of the concave objective so it always
  // brackets the maximizer.
  const auto lam_of = [&](double logK) {
    const double K = std::pow(10.0, logK);
    return (m0 * std::pow(K, 1.0 - q) - std::pow(K, p - q) * std::pow(E, p)) /
           std::pow(E, q);
  };
  const double log_k_center = std::log10(
      std::pow(m0 * (1.0 - q) / ((p - q) * std::pow(E, p)), 1.0 / (p - 1.0)));
  const ScalarExtremum best =
      golden_max(lam_of, log_k_center - 3.0, log_k_center + 3.0, 1e-12);
  const double lambda0 = best.value;
  const double K0 = std::pow(10.0, best.x);

  PairConstruction pc;
  pc.f = Nonlinearity::concave_convex(lambda, q, p);
  pc.eigen = fl.eigen;
  pc.threshold_info.lambda0 = lambda0;
  pc.threshold_info.k_threshold = K0;

  if (!(lambda < lambda0)) {
    raise(ErrorCode::lambda_too_large,
          "lambda = " + std::to_string(lambda) +
              " is not below the admissibility bound lambda0 = " +
              std::to_string(lambda0));
  }
  pc.K = K0;

  const double phi_min = fl.phi_min_interior;
  for (double eps = K0 * fl.ratio_e_over_phi; eps >= kEpsFloor; eps *= 0.5) {
    OrderInterval pair = make_pair_eps_K(fl, eps, K0);
    if (!leq(pair.lower, pair.upper).holds) continue;
    const MRange mr = m_range_over_interval(pair, m, pc.f);
    const double lhs = mr.mu_max * fl.eigen.lambda1 * std::pow(eps, 1.0 - q);
    const double rhs = lambda + std::pow(eps * phi_min, p - q);
    if (lhs <= rhs) {
      pc.pair = std::move(pair);
      pc.epsilon = eps;
      pc.mu_max_used = mr.mu_max;
      return finish(std::move(pc), m);
    }
  }
  raise(ErrorCode::no_epsilon,
        "no eps >= 1e-14 closes the subsolution inequality");
}

PairConstruction build_pair_logistic(double lambda, double p,
                                     const KirchhoffM& m, const Interval& domain) {
  if (!(p > 1.0)) raise(ErrorCode::invalid_config, "logistic model requires p > 1");
  if (!(lambda > 0.0)) {
    raise(ErrorCode::lambda_below_threshold,
          "lambda must exceed lambda1 * m_inf > 0");
  }
  const Fields fl = build_fields(domain);

  PairConstruction pc;
  pc.f = Nonlinearity::logistic(lambda, p);
  pc.eigen = fl.eigen;
  pc.K = lambda;

  // The constant bound is a supersolution only when f(x, lambda) <= 0,
  // i.e. lambda^{p-2} >= 1.
  const double f_at_top = lambda * lambda - std::pow(lambda, p);
  if (f_at_top > kMarginSlack) {
    raise(ErrorCode::not_verified,
          "the constant upper bound fails the supersolution sign: f(lambda) = " +
              std::to_string(f_at_top) + " > 0");
  }

  double last_gap = std::numeric_limits<double>::infinity();
  for (double eps = lambda / 2.0; eps >= kEpsFloor; eps *= 0.5) {
    OrderInterval pair;
    pair.lower = scaled(fl.eigen.phi1, eps);
    pair.upper = make_grid_function(domain, lambda);
    pair.lower_neg_laplacian = scaled(fl.eigen.phi1, eps * fl.eigen.lambda1);
    pair.upper_neg_laplacian = make_grid_function(domain, 0.0);
    if (!leq(pair.lower, pair.upper).holds) continue;
    const MRange mr = m_range_over_interval(pair, m, pc.f);
    const double m_inf = mr.mu_max;
    last_gap = m_inf * fl.eigen.lambda1 + std::pow(eps, p - 1.0) - lambda;
    if (last_gap <= 0.0) {
      pc.pair = std::move(pair);
      pc.epsilon = eps;
      pc.mu_max_used = m_inf;
      pc.threshold_info.lambda1_m_inf = fl.eigen.lambda1 * m_inf;
      return finish(std::move(pc), m);
    }
    pc.threshold_info.lambda1_m_inf = fl.eigen.lambda1 * m_inf;
  }
  raise(ErrorCode::lambda_below_threshold,
        "lambda = " + std::to_string(lambda) +
            " does not exceed lambda1 * m_inf (final gap " +
            std::to_string(last_gap) + ")");
}

}  // namespace kirchhoff

#pragma once

#include <optional>

#include "kirchhoff/kirchhoff_m.hpp"
#include "kirchhoff/nonlinearity.hpp"
#include "kirchhoff/spectral.hpp"
#include "kirchhoff/subsuper.hpp"

namespace kirchhoff {

struct ThresholdInfo {
  std::optional<double> k_threshold;    // least admissible upper amplitude
  std::optional<double> lambda0;        // concave-convex admissibility bound
  std::optional<double> lambda1_m_inf;  // logistic threshold lambda1 * m_inf
};

/// A constructed and verified sub-supersolution pair eps*phi1 <= K*e (or the
/// constant upper bound for the logistic model), together with the numbers
/// that closed the admissibility inequalities.
struct PairConstruction {
  OrderInterval pair;
  Nonlinearity f;
  double epsilon = 0.0;
  double K = 0.0;
  double mu_max_used = 0.0;
  bool feasible = false;
  ThresholdInfo threshold_info;
  EigenPair eigen;
};

/// lambda u^q, 0 < q < 1: upper K*e with K^{1-q} >= lambda |e|_inf^q / m0,
/// lower eps*phi1 with eps shrunk geometrically until
/// mu_max * lambda1 * eps^{1-q} <= lambda, recomputing mu_max over the current
/// interval at each trial (mu_max depends on eps, but only shrinks as eps
/// does, so the first eps that closes the loop is sound).
/// Refuses lambda <= 0 (NoPositiveSolution).
PairConstruction build_pair_sublinear(double lambda, double q,
                                      const KirchhoffM& m, const Interval& domain);

/// lambda u^q + u^p, 0 < q < 1 < p: lambda0 is the maximum over K > 0 of
/// (m0 K^{1-q} - K^{p-q} |e|_inf^p) / |e|_inf^q; requires lambda < lambda0
/// (LambdaTooLarge otherwise) and picks the maximizing K.
PairConstruction build_pair_concave_convex(double lambda, double q, double p,
                                           const KirchhoffM& m,
                                           const Interval& domain);

/// lambda u - u^p, p > 1: constant upper bound lambda; feasible when
/// mu_max * lambda1 + eps^{p-1} <= lambda for some eps (mu_max over
/// [eps*phi1, lambda] is the working-range stand-in for an upper bound of M).
/// The constant bound must itself satisfy f(x, lambda) <= 0; otherwise the
/// construction is rejected (NotVerified).
PairConstruction build_pair_logistic(double lambda, double p,
                                     const KirchhoffM& m, const Interval& domain);

}  // namespace kirchhoff

#pragma once

#include <optional>

#include "kirchhoff/grid.hpp"
#include "kirchhoff/kirchhoff_m.hpp"
#include "kirchhoff/nonlinearity.hpp"

namespace kirchhoff {

/// Candidate sub-supersolution pair. When a constructor knows -Δ of a member
/// in closed form (eigenfunctions, the torsion function, constants) it fills
/// the matching field; verification prefers those values over the discrete
/// stencil, which removes O(h^2) noise from the margins.
struct OrderInterval {
  GridFunction lower;
  GridFunction upper;
  std::optional<GridFunction> lower_neg_laplacian;
  std::optional<GridFunction> upper_neg_laplacian;
};

/// Range of the scalar s = integral of f(x,w)w over all w in the order
/// interval, and the induced range of M(R(s)).
struct MRange {
  double s_min = 0.0;
  double s_max = 0.0;
  double mu_min = 0.0;
  double mu_max = 0.0;
};

struct PairReport {
  bool ok = false;
  GridFunction super_margin;  // per interior node; 0 at boundary nodes
  GridFunction sub_margin;
  MRange m_range;
  int worst_super_node = 0;
  int worst_sub_node = 0;
  double worst_super_margin = 0.0;
  double worst_sub_margin = 0.0;
};

inline constexpr double kMarginSlack = 1e-10;
inline constexpr int kDefaultSamplesPerNode = 64;

/// Bounds of M(R(integral f(x,w)w)) over w in [lower, upper].
///
/// M(R(.)) depends on w only through the scalar s, so the quantifier over the
/// whole order interval reduces exactly to the interval [s_min, s_max]; the
/// only approximate step is the per-node extremization of g(s) = f(x,s)s,
/// done at the endpoints when g is monotone on the slice and otherwise by
/// dense sampling with golden-section refinement.
MRange m_range_over_interval(const OrderInterval& pair, const KirchhoffM& m,
                             const Nonlinearity& f,
                             int samples_per_node = kDefaultSamplesPerNode);

/// Checks the two differential inequalities at every interior node against
/// the worst admissible coefficient in [mu_min, mu_max]:
///   supersolution:  mu * (-Δ upper) >= f(x, upper) for every admissible mu
///   subsolution:    mu * (-Δ lower) <= f(x, lower) for every admissible mu
/// The binding mu is mu_min or mu_max depending on the sign of the Laplacian
/// term. ok requires all margins >= -1e-10 plus the order and boundary
/// conditions (lower <= upper everywhere, lower <= 0 <= upper at the ends).
PairReport verify_pair(const OrderInterval& pair, const KirchhoffM& m,
                       const Nonlinearity& f,
                       int samples_per_node = kDefaultSamplesPerNode);

/// Margin evaluation against an explicit mu-range (used by verify_pair and by
/// the range-tightening property tests). Performs the same order/boundary
/// validation.
PairReport verify_pair_with_mu(const OrderInterval& pair, const Nonlinearity& f,
                               const MRange& range);

/// Throws OrderViolated / BoundaryViolated when the pair's invariants fail.
void validate_pair(const OrderInterval& pair);

}  // namespace kirchhoff

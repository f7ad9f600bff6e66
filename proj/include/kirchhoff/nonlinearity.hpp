#pragma once

#include <functional>
#include <string>

#include "kirchhoff/errors.hpp"

namespace kirchhoff {

enum class MonotoneHint { nondecreasing, nonincreasing, none };

/// Reaction term f(x,u) as a tagged model. The fractional-power models are
/// defined for u >= 0 only; evaluating them at u < 0 raises DomainError.
struct Nonlinearity {
  enum class Kind { sublinear, concave_convex, logistic, custom };

  Kind kind = Kind::custom;
  double lambda = 0.0;
  double q = 0.0;  // concave exponent, 0 < q < 1 where applicable
  double p = 0.0;  // convex / decay exponent
  std::function<double(double, double)> fn;  // custom f(x,u)
  MonotoneHint hint = MonotoneHint::none;    // u -> f(x,u) for custom

  // lambda * u^q, 0 < q < 1
  static Nonlinearity sublinear(double lambda, double q);
  // lambda * u^q + u^p, 0 < q < 1 < p
  static Nonlinearity concave_convex(double lambda, double q, double p);
  // lambda * u - u^p, p > 1
  static Nonlinearity logistic(double lambda, double p);
  static Nonlinearity custom(std::function<double(double, double)> fn,
                             MonotoneHint hint = MonotoneHint::none);

  std::string kind_name() const;
};

double eval_f(const Nonlinearity& f, double x, double u);

/// True when u -> f(x,u) is nondecreasing over [lo, hi] (analytic for the
/// model kinds, the declared hint for custom).
bool f_nondecreasing_on(const Nonlinearity& f, double lo, double hi);

/// Monotonicity of s -> f(x,s)*s over [lo, hi] with lo >= 0, where decidable;
/// none means the caller must extremize by sampling.
MonotoneHint product_trend_on(const Nonlinearity& f, double lo, double hi);

}  // namespace kirchhoff

#include "kirchhoff/nonlinearity.hpp"

#include <cmath>

namespace kirchhoff {

namespace {

bool is_integer(double p) {
  return std::floor(p) == p && std::abs(p) < 1e15;
}

double pow_checked(double u, double expnt) {
  if (u < 0.0 && !is_integer(expnt)) {
    raise(ErrorCode::domain_error,
          "fractional power of a negative value (u = " + std::to_string(u) + ")");
  }
  return std::pow(u, expnt);
}

}  // namespace

Nonlinearity Nonlinearity::sublinear(double lambda, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    raise(ErrorCode::invalid_config, "sublinear model requires 0 < q < 1");
  }
  Nonlinearity f;
  f.kind = Kind::sublinear;
  f.lambda = lambda;
  f.q = q;
  return f;
}

Nonlinearity Nonlinearity::concave_convex(double lambda, double q, double p) {
  if (!(q > 0.0 && q < 1.0 && p > 1.0)) {
    raise(ErrorCode::invalid_config, "concave-convex model requires 0 < q < 1 < p");
  }
  Nonlinearity f;
  f.kind = Kind::concave_convex;
  f.lambda = lambda;
  f.q = q;
  f.p = p;
  return f;
}

Nonlinearity Nonlinearity::logistic(double lambda, double p) {
  if (!(p > 1.0)) raise(ErrorCode::invalid_config, "logistic model requires p > 1");
  Nonlinearity f;
  f.kind = Kind::logistic;
  f.lambda = lambda;
  f.p = p;
  return f;
}

Nonlinearity Nonlinearity::custom(std::function<double(double, double)> fn,
                                  MonotoneHint hint) {
  Nonlinearity f;
  f.kind = Kind::custom;
  f.fn = std::move(fn);
  f.hint = hint;
  return f;
}

std::string Nonlinearity::kind_name() const {
  switch (kind) {
    case Kind::sublinear: return "sublinear";
    case Kind::concave_convex: return "concave_convex";
    case Kind::logistic: return "logistic";
    case Kind::custom: return "custom";
  }
  return "?";
}

double eval_f(const Nonlinearity& f, double x, double u) {
  switch (f.kind) {
    case Nonlinearity::Kind::sublinear:
      return f.lambda * pow_checked(u, f.q);
    case Nonlinearity::Kind::concave_convex:
      return f.lambda * pow_checked(u, f.q) + pow_checked(u, f.p);
    case Nonlinearity::Kind::logistic:
      return f.lambda * u - pow_checked(u, f.p);
    case Nonlinearity::Kind::custom:
      return f.fn(x, u);
  }
  raise(ErrorCode::invalid_config, "nonlinearity has no kind");
}

bool f_nondecreasing_on(const Nonlinearity& f, double lo, double hi) {
  switch (f.kind) {
    case Nonlinearity::Kind::sublinear:
      return f.lambda >= 0.0 && lo >= 0.0;
    case Nonlinearity::Kind::concave_convex:
      return f.lambda >= 0.0 && lo >= 0.0;
    case Nonlinearity::Kind::logistic: {
      // f' = lambda - p u^{p-1}; nondecreasing up to (lambda/p)^{1/(p-1)}
      if (lo < 0.0 || f.lambda <= 0.0) return false;
      const double u_crit = std::pow(f.lambda / f.p, 1.0 / (f.p - 1.0));
      return hi <= u_crit;
    }
    case Nonlinearity::Kind::custom:
      return f.hint == MonotoneHint::nondecreasing;
  }
  return false;
}

MonotoneHint product_trend_on(const Nonlinearity& f, double lo, double hi) {
  if (lo < 0.0) return MonotoneHint::none;
  switch (f.kind) {
    case Nonlinearity::Kind::sublinear:
      // g(s) = lambda s^{1+q}
      if (f.lambda >= 0.0) return MonotoneHint::nondecreasing;
      return MonotoneHint::nonincreasing;
    case Nonlinearity::Kind::concave_convex:
      if (f.lambda >= 0.0) return MonotoneHint::nondecreasing;
      return MonotoneHint::none;
    case Nonlinearity::Kind::logistic: {
      // g(s) = lambda s^2 - s^{p+1}, increasing up to (2 lambda/(p+1))^{1/(p-1)}
      if (f.lambda <= 0.0) return MonotoneHint::none;
      const double s_crit = std::pow(2.0 * f.lambda / (f.p + 1.0), 1.0 / (f.p - 1.0));
      if (hi <= s_crit) return MonotoneHint::nondecreasing;
      return MonotoneHint::none;
    }
    case Nonlinearity::Kind::custom:
      return MonotoneHint::none;
  }
  return MonotoneHint::none;
}

}  // namespace kirchhoff

#pragma once

#include <functional>
#include <string>

#include "kirchhoff/errors.hpp"
#include "kirchhoff/grid.hpp"
#include "kirchhoff/nonlinearity.hpp"

namespace kirchhoff {

enum class Monotonicity { increasing, nonincreasing, unknown };

/// Flags from scanning M, G(t) = M(t)t and H(t) = M(t^2)t over the working
/// range. For the power_shift family the M flags are decided analytically
/// (p > 0, b > 0 => increasing; p < 0, b > 0 => decreasing); the sampled scan
/// decides everything else.
struct Classification {
  double m0 = 0.0;            // least M sample over the scan range
  bool m0_positive = false;   // m0 > 0
  bool m1_nonincreasing = false;
  bool m2_nondecreasing = false;       // weak form; constants qualify
  bool m2_strictly_increasing = false;
  bool m3_invertible = false;
  int g_direction = 0;  // +1 increasing, -1 decreasing, 0 not monotone
  bool h_increasing = false;
};

/// Bracket bookkeeping for the inversion of G (and H): strictly monotone on
/// [0, t_max] per the classification scan; the bracket doubles on demand up
/// to the hard cap, beyond which inversion fails loudly.
struct GInversionTable {
  double t_max = 0.0;
  int direction = 0;
  double tolerance = 1e-12;
};

/// Kirchhoff coefficient M(t), t >= 0, bundled with its verified working
/// range, monotonicity metadata and the derived inversions R = G^{-1} and
/// H^{-1}. Immutable after construction; all member calls are const and
/// concurrently usable.
class KirchhoffM {
 public:
  enum class Family { power_shift, constant, custom };

  static constexpr double kDefaultScanMax = 1e6;
  static constexpr int kDefaultSamples = 4096;
  static constexpr double kBracketCap = 1e12;
  static constexpr double kInvertTol = 1e-12;

  // M(t) = a + b (t + c)^p with a, c >= 0, b > 0; p < 0 requires c > 0.
  static KirchhoffM power_shift(double a, double b, double c, double p,
                                double scan_max = kDefaultScanMax);
  static KirchhoffM constant(double m, double scan_max = kDefaultScanMax);
  static KirchhoffM custom(std::function<double(double)> m,
                           double scan_max = kDefaultScanMax);

  double operator()(double t) const { return eval_M(t); }
  double eval_M(double t) const;
  double eval_G(double t) const;  // M(t) * t
  double eval_H(double t) const;  // M(t^2) * t

  /// R(s): the t >= 0 with G(t) = s, by bisection on the monotone bracket,
  /// accurate to |G(t) - s| <= max(tol, tol*|s|).
  double invert_G(double s) const;
  double invert_H(double s) const;

  /// Scan with the given sample count (half linear, half logarithmic).
  Classification classify(int samples) const;

  const Classification& classification() const { return cls_; }
  Monotonicity monotonicity() const;
  double m0() const { return cls_.m0; }
  double scan_max() const { return scan_max_; }
  Family family() const { return family_; }
  // power_shift parameters (constant(m) reports a = m, b = c = p = 0)
  double param_a() const { return a_; }
  double param_b() const { return b_; }
  double param_c() const { return c_; }
  double param_p() const { return p_; }
  std::string family_name() const;

 private:
  KirchhoffM() = default;
  void finish_construction();
  double invert_monotone(const std::function<double(double)>& g, int direction,
                         double s, const char* what) const;

  Family family_ = Family::custom;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0, p_ = 0.0;
  std::function<double(double)> fn_;
  double scan_max_ = kDefaultScanMax;
  Classification cls_;
  GInversionTable g_table_;
};

/// The nonlocal operator w -> R( integral of f(x,w) * w ). Raises
/// NegativeMass when the integral falls below G(0) (the inversion is
/// undefined there) and OutOfRange when it exceeds the expandable bracket.
double nonlocal_R(const KirchhoffM& m, const Nonlinearity& f, const GridFunction& w);

}  // namespace kirchhoff

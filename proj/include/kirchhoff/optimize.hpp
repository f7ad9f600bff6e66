#pragma once

#include <cmath>
#include <functional>

namespace kirchhoff {

struct ScalarExtremum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section maximization of a unimodal function on [lo, hi]; stops when
/// the bracket width is <= xtol. Returns the best probe, which for monotone
/// slices lands at the relevant endpoint within xtol.
inline ScalarExtremum golden_max(const std::function<double(double)>& f,
                                 double lo, double hi, double xtol) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > xtol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  // Endpoints can beat the interior probes on monotone slices.
  ScalarExtremum best{c, fc};
  if (fd > best.value) best = {d, fd};
  const double flo = f(lo), fhi = f(hi);
  if (flo > best.value) best = {lo, flo};
  if (fhi > best.value) best = {hi, fhi};
  return best;
}

inline ScalarExtremum golden_min(const std::function<double(double)>& f,
                                 double lo, double hi, double xtol) {
  ScalarExtremum r = golden_max([&](double x) { return -f(x); }, lo, hi, xtol);
  return {r.x, -r.value};
}

}  // namespace kirchhoff

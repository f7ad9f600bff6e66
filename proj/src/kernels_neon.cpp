// NEON kernel variants for arm64, where float64x2 is baseline.

#include <arm_neon.h>

#include <cmath>
#include <cstddef>
#include <limits>

#include "kirchhoff/kernels.hpp"

namespace kirchhoff::kernels {

namespace {

double neon_sum(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double neon_dot(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double neon_sum_sq_diff(const double* x, std::size_t n) {
  if (n < 2) return 0.0;
  const std::size_t m = n - 1;
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(x + i + 1), vld1q_f64(x + i));
    acc = vfmaq_f64(acc, d, d);
  }
  double s = vaddvq_f64(acc);
  for (; i < m; ++i) {
    const double d = x[i + 1] - x[i];
    s += d * d;
  }
  return s;
}

double neon_max_minus(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vmaxq_f64(acc, vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
  }
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, x[i] - y[i]);
  return m;
}

double neon_sup_abs_diff(const double* x, const double* y, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vmaxq_f64(acc, vabsq_f64(vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i))));
  }
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double neon_sup_abs(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
  double m = vmaxvq_f64(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void neon_second_diff_scaled(const double* x, double* out, std::size_t n,
                             double scale) {
  if (n < 3) return;
  const float64x2_t two = vdupq_n_f64(2.0);
  const float64x2_t sc = vdupq_n_f64(scale);
  std::size_t i = 1;
  for (; i + 2 <= n - 1; i += 2) {
    const float64x2_t left = vld1q_f64(x + i - 1);
    const float64x2_t mid = vld1q_f64(x + i);
    const float64x2_t right = vld1q_f64(x + i + 1);
    const float64x2_t sd = vaddq_f64(left, vfmsq_f64(right, two, mid));
    vst1q_f64(out + i, vmulq_f64(sc, sd));
  }
  for (; i + 1 < n; ++i) {
    out[i] = scale * (x[i - 1] - 2.0 * x[i] + x[i + 1]);
  }
}

void neon_clamp(const double* x, const double* lo, const double* hi,
                double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t v = vld1q_f64(x + i);
    v = vmaxq_f64(v, vld1q_f64(lo + i));
    v = vminq_f64(v, vld1q_f64(hi + i));
    vst1q_f64(out + i, v);
  }
  for (; i < n; ++i) out[i] = std::min(std::max(x[i], lo[i]), hi[i]);
}

constexpr KernelOps kNeonOps = {
    "neon",
    neon_sum,
    neon_dot,
    neon_sum_sq_diff,
    neon_max_minus,
    neon_sup_abs_diff,
    neon_sup_abs,
    neon_second_diff_scaled,
    neon_clamp,
};

}  // namespace

const KernelOps* neon_ops() { return &kNeonOps; }

}  // namespace kirchhoff::kernels

#include "kirchhoff/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace kirchhoff::kernels {

#if defined(KIRCHHOFF_HAVE_AVX2)
const KernelOps* avx2_ops_if_supported();  // kernels_avx2.cpp
#endif
#if defined(KIRCHHOFF_HAVE_NEON)
const KernelOps* neon_ops();  // kernels_neon.cpp
#endif

namespace {

double scalar_sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double scalar_dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double scalar_sum_sq_diff(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = x[i + 1] - x[i];
    acc += d * d;
  }
  return acc;
}

double scalar_max_minus(const double* x, const double* y, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, x[i] - y[i]);
  return m;
}

double scalar_sup_abs_diff(const double* x, const double* y, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double scalar_sup_abs(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void scalar_second_diff_scaled(const double* x, double* out, std::size_t n,
                               double scale) {
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = scale * (x[i - 1] - 2.0 * x[i] + x[i + 1]);
  }
}

void scalar_clamp(const double* x, const double* lo, const double* hi,
                  double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::min(std::max(x[i], lo[i]), hi[i]);
  }
}

constexpr KernelOps kScalarOps = {
    "scalar",
    scalar_sum,
    scalar_dot,
    scalar_sum_sq_diff,
    scalar_max_minus,
    scalar_sup_abs_diff,
    scalar_sup_abs,
    scalar_second_diff_scaled,
    scalar_clamp,
};

const KernelOps* select_active() {
  const char* force = std::getenv("KIRCHHOFF_KERNELS");
  if (force != nullptr && std::strcmp(force, "scalar") == 0) return &kScalarOps;
#if defined(KIRCHHOFF_HAVE_AVX2)
  if (const KernelOps* ops = avx2_ops_if_supported()) {
    if (force == nullptr || std::strcmp(force, "avx2") == 0) return ops;
  }
#endif
#if defined(KIRCHHOFF_HAVE_NEON)
  if (force == nullptr || std::strcmp(force, "neon") == 0) return neon_ops();
#endif
  return &kScalarOps;
}

}  // namespace

const KernelOps& scalar_ops() { return kScalarOps; }

std::vector<const KernelOps*> available_ops() {
  std::vector<const KernelOps*> ops{&kScalarOps};
#if defined(KIRCHHOFF_HAVE_AVX2)
  if (const KernelOps* avx2 = avx2_ops_if_supported()) ops.push_back(avx2);
#endif
#if defined(KIRCHHOFF_HAVE_NEON)
  ops.push_back(neon_ops());
#endif
  return ops;
}

const KernelOps& active_ops() {
  static const KernelOps* active = select_active();
  return *active;
}

}  // namespace kirchhoff::kernels

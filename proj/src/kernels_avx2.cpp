// AVX2 kernel variants. This translation unit is compiled with -mavx2 -mfma;
// callers must go through avx2_ops_if_supported(), which gates on a runtime
// CPU check so the binary stays safe on older x86-64 parts.

#include <immintrin.h>

#include <cmath>
#include <cstddef>
#include <limits>

#include "kirchhoff/kernels.hpp"

namespace kirchhoff::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_max_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_max_sd(lo, shuf));
}

inline __m256d vabs(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

double avx2_sum(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i];
  return acc;
}

double avx2_dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double avx2_sum_sq_diff(const double* x, std::size_t n) {
  if (n < 2) return 0.0;
  const std::size_t m = n - 1;  // number of gaps
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1), _mm256_loadu_pd(x + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum(acc);
  for (; i < m; ++i) {
    const double d = x[i + 1] - x[i];
    s += d * d;
  }
  return s;
}

double avx2_max_minus(const double* x, const double* y, std::size_t n) {
  const double ninf = -std::numeric_limits<double>::infinity();
  __m256d acc = _mm256_set1_pd(ninf);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, x[i] - y[i]);
  return m;
}

double avx2_sup_abs_diff(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, vabs(_mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i))));
  }
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

double avx2_sup_abs(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_max_pd(acc, vabs(_mm256_loadu_pd(x + i)));
  }
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void avx2_second_diff_scaled(const double* x, double* out, std::size_t n,
                             double scale) {
  if (n < 3) return;
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d sc = _mm256_set1_pd(scale);
  std::size_t i = 1;
  for (; i + 4 <= n - 1; i += 4) {
    const __m256d left = _mm256_loadu_pd(x + i - 1);
    const __m256d mid = _mm256_loadu_pd(x + i);
    const __m256d right = _mm256_loadu_pd(x + i + 1);
    const __m256d sd = _mm256_add_pd(left, _mm256_fnmadd_pd(two, mid, right));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(sc, sd));
  }
  for (; i + 1 < n; ++i) {
    out[i] = scale * (x[i - 1] - 2.0 * x[i] + x[i + 1]);
  }
}

void avx2_clamp(const double* x, const double* lo, const double* hi,
                double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    v = _mm256_max_pd(v, _mm256_loadu_pd(lo + i));
    v = _mm256_min_pd(v, _mm256_loadu_pd(hi + i));
    _mm256_storeu_pd(out + i, v);
  }
  for (; i < n; ++i) out[i] = std::min(std::max(x[i], lo[i]), hi[i]);
}

constexpr KernelOps kAvx2Ops = {
    "avx2",
    avx2_sum,
    avx2_dot,
    avx2_sum_sq_diff,
    avx2_max_minus,
    avx2_sup_abs_diff,
    avx2_sup_abs,
    avx2_second_diff_scaled,
    avx2_clamp,
};

}  // namespace

const KernelOps* avx2_ops_if_supported() {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &kAvx2Ops : nullptr;
}

}  // namespace kirchhoff::kernels

#pragma once

#include <cstddef>
#include <vector>

namespace kirchhoff::kernels {

// Data-parallel inner loops over contiguous doubles: reductions, the
// three-point stencil, and nodewise clamping. Every operation has a scalar
// reference implementation; on x86-64 an AVX2 variant and on arm64 a NEON
// variant are compiled in and one is selected at startup. SIMD reductions
// reassociate sums, so variants may differ in the last bits; equivalence
// between lanes is tested with tolerances, max/clamp bit-exactly.
struct KernelOps {
  const char* name;

  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  // sum over i in [0, n-2] of (x[i+1] - x[i])^2
  double (*sum_sq_diff)(const double* x, std::size_t n);
  // max over i of x[i] - y[i]; -inf when n == 0
  double (*max_minus)(const double* x, const double* y, std::size_t n);
  double (*sup_abs_diff)(const double* x, const double* y, std::size_t n);
  double (*sup_abs)(const double* x, std::size_t n);
  // out[i] = scale * (x[i-1] - 2*x[i] + x[i+1]) for i in [1, n-2];
  // out[0] and out[n-1] are not written
  void (*second_diff_scaled)(const double* x, double* out, std::size_t n,
                             double scale);
  // out[i] = min(max(x[i], lo[i]), hi[i])
  void (*clamp)(const double* x, const double* lo, const double* hi,
                double* out, std::size_t n);
};

const KernelOps& scalar_ops();

// Variants runnable on this machine, scalar first.
std::vector<const KernelOps*> available_ops();

// Widest supported variant; override with KIRCHHOFF_KERNELS=scalar|avx2|neon.
const KernelOps& active_ops();

}  // namespace kirchhoff::kernels

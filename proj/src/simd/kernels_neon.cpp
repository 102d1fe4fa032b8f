#include "qdisc/simd/kernels.hpp"

#include <arm_neon.h>

#include <cmath>

namespace qdisc::simd::neon {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void scaled_product_add(double alpha, const double* w, const double* x,
                        double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t aw = vmulq_f64(va, vld1q_f64(w + i));
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), aw, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += alpha * w[i] * x[i];
}

double abs_sum(const double* a, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += std::abs(a[i]);
  return s;
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{Isa::neon, &dot, &scaled_product_add, &abs_sum};
  return t;
}

}  // namespace qdisc::simd::neon

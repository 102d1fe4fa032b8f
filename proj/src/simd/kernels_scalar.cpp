#include "qdisc/simd/kernels.hpp"

#include <cmath>

namespace qdisc::simd::scalar {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

void scaled_product_add(double alpha, const double* w, const double* x,
                        double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * w[i] * x[i];
}

double abs_sum(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::abs(a[i]);
  return acc;
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{Isa::scalar, &dot, &scaled_product_add, &abs_sum};
  return t;
}

}  // namespace qdisc::simd::scalar

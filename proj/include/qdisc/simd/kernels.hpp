#pragma once

// Data-parallel double-precision kernels used by the Fock-space oracle.
//
// Every kernel has a scalar reference implementation. AVX2+FMA (x86-64) and
// NEON (aarch64) variants are compiled into separate translation units and
// picked once at runtime; the free functions in qdisc::simd forward to the
// active table. Setting QDISC_SIMD=scalar in the environment pins the scalar
// path.
//
// Complex buffers are passed as interleaved (re, im) doubles.

#include <cstddef>
#include <span>
#include <string_view>

namespace qdisc::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  void (*scaled_product_add)(double alpha, const double* w, const double* x,
                             double* y, std::size_t n);
  double (*abs_sum)(const double* a, std::size_t n);
};

namespace scalar {
const KernelTable& table();
}
#if defined(QDISC_HAVE_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif
#if defined(QDISC_HAVE_NEON)
namespace neon {
const KernelTable& table();
}
#endif

std::string_view isa_name(Isa isa);

/// True when the variant was compiled in and the running CPU supports it.
bool isa_supported(Isa isa);

/// Table for a specific ISA. Throws std::invalid_argument if unsupported.
const KernelTable& table_for(Isa isa);

/// The table selected for this process.
const KernelTable& active();

/// Replaces the active table. Intended for tests and benchmarks; not
/// synchronized with concurrent kernel calls.
void force_isa(Isa isa);

/// sum_i a[i] * b[i]
inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

/// y[i] += alpha * w[i] * x[i]
inline void scaled_product_add(double alpha, std::span<const double> w,
                               std::span<const double> x, std::span<double> y) {
  active().scaled_product_add(alpha, w.data(), x.data(), y.data(), y.size());
}

/// sum_i |a[i]|
inline double abs_sum(std::span<const double> a) {
  return active().abs_sum(a.data(), a.size());
}

}  // namespace qdisc::simd

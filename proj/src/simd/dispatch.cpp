#include "qdisc/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qdisc::simd {
namespace {

const KernelTable* detect() {
  if (const char* env = std::getenv("QDISC_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return &scalar::table();
    if (want == "avx2" && isa_supported(Isa::avx2)) return &table_for(Isa::avx2);
    if (want == "neon" && isa_supported(Isa::neon)) return &table_for(Isa::neon);
  }
  if (isa_supported(Isa::avx2)) return &table_for(Isa::avx2);
  if (isa_supported(Isa::neon)) return &table_for(Isa::neon);
  return &scalar::table();
}

std::atomic<const KernelTable*>& slot() {
  static std::atomic<const KernelTable*> current{detect()};
  return current;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(QDISC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(QDISC_HAVE_NEON)
      return true;  // baseline on aarch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& table_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("SIMD variant not available: " + std::string(isa_name(isa)));
  }
  switch (isa) {
#if defined(QDISC_HAVE_AVX2)
    case Isa::avx2: return avx2::table();
#endif
#if defined(QDISC_HAVE_NEON)
    case Isa::neon: return neon::table();
#endif
    default: return scalar::table();
  }
}

const KernelTable& active() { return *slot().load(std::memory_order_acquire); }

void force_isa(Isa isa) { slot().store(&table_for(isa), std::memory_order_release); }

}  // namespace qdisc::simd

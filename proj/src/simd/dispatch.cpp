#include "modcurve/simd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace modcurve::simd {

const Kernels& active_kernels() {
  static const Kernels* chosen = [] {
    const char* force = std::getenv("MODCURVE_SIMD");
    if (force && std::strcmp(force, "scalar") == 0) return &scalar_kernels();
    const Kernels* avx2 = avx2_kernels();
    if (force && std::strcmp(force, "avx2") == 0 && avx2) return avx2;
    return avx2 ? avx2 : &scalar_kernels();
  }();
  return *chosen;
}

} // namespace modcurve::simd

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "utroots/kernels.hpp"

namespace utroots {

bool avx2_supported();  // defined in kernels_avx2.cpp

namespace {

enum class Kernel { Scalar, Avx2 };

Kernel pick_default() {
  if (const char* env = std::getenv("UTROOTS_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return Kernel::Scalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Kernel::Avx2;
    if (std::strcmp(env, "auto") != 0) return Kernel::Scalar;
  }
  return avx2_supported() ? Kernel::Avx2 : Kernel::Scalar;
}

std::atomic<Kernel>& selection() {
  static std::atomic<Kernel> sel{pick_default()};
  return sel;
}

}  // namespace

bool kernel_available(const char* name) {
  if (std::strcmp(name, "scalar") == 0) return true;
  if (std::strcmp(name, "avx2") == 0) return avx2_supported();
  return false;
}

const char* active_kernel() {
  return selection().load() == Kernel::Avx2 ? "avx2" : "scalar";
}

bool set_active_kernel(const char* name) {
  if (std::strcmp(name, "auto") == 0) {
    selection().store(avx2_supported() ? Kernel::Avx2 : Kernel::Scalar);
    return true;
  }
  if (std::strcmp(name, "scalar") == 0) {
    selection().store(Kernel::Scalar);
    return true;
  }
  if (std::strcmp(name, "avx2") == 0 && avx2_supported()) {
    selection().store(Kernel::Avx2);
    return true;
  }
  return false;
}

void matmul_mod(const uint32_t* a, const uint32_t* b, uint32_t* c,
                size_t rows, size_t inner, size_t cols, uint32_t p) {
  if (selection().load() == Kernel::Avx2) {
    // The AVX2 kernel defers reduction, so inner * (p-1)^2 must fit 32 bits.
    uint64_t sq = static_cast<uint64_t>(p - 1) * (p - 1);
    if (sq == 0 || inner <= (UINT32_MAX / sq)) {
      matmul_mod_avx2(a, b, c, rows, inner, cols, p);
      return;
    }
  }
  matmul_mod_scalar(a, b, c, rows, inner, cols, p);
}

}  // namespace utroots

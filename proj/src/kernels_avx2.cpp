// AVX2 variant of the mod-p matrix product. This translation unit is the only
// one compiled with -mavx2; callers must check kernel_available("avx2") so the
// vector path never runs on CPUs without the extension.

#include "utroots/kernels.hpp"

#if (defined(__x86_64__) || defined(_M_X64)) && defined(__AVX2__)
#define UTROOTS_HAVE_AVX2 1
#include <immintrin.h>
#else
#define UTROOTS_HAVE_AVX2 0
#endif

#include <vector>

namespace utroots {

#if UTROOTS_HAVE_AVX2

void matmul_mod_avx2(const uint32_t* a, const uint32_t* b, uint32_t* c,
                     size_t rows, size_t inner, size_t cols, uint32_t p) {
  // 32-bit accumulators: the dispatcher guarantees inner * (p-1)^2 < 2^32.
  std::vector<uint32_t> acc(cols);
  size_t vec_end = cols - cols % 8;
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) acc[j] = 0;
    const uint32_t* arow = a + i * inner;
    for (size_t k = 0; k < inner; ++k) {
      uint32_t av = arow[k];
      if (av == 0) continue;
      const uint32_t* brow = b + k * cols;
      __m256i va = _mm256_set1_epi32(static_cast<int>(av));
      size_t j = 0;
      for (; j < vec_end; j += 8) {
        __m256i vb = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(brow + j));
        __m256i vc = _mm256_loadu_si256(
            reinterpret_cast<__m256i*>(acc.data() + j));
        vc = _mm256_add_epi32(vc, _mm256_mullo_epi32(va, vb));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc.data() + j), vc);
      }
      for (; j < cols; ++j) acc[j] += av * brow[j];
    }
    uint32_t* crow = c + i * cols;
    for (size_t j = 0; j < cols; ++j) crow[j] = acc[j] % p;
  }
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

#else

void matmul_mod_avx2(const uint32_t* a, const uint32_t* b, uint32_t* c,
                     size_t rows, size_t inner, size_t cols, uint32_t p) {
  matmul_mod_scalar(a, b, c, rows, inner, cols, p);
}

bool avx2_supported() { return false; }

#endif

}  // namespace utroots

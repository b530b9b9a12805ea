#include <vector>

#include "utroots/kernels.hpp"

namespace utroots {

void matmul_mod_scalar(const uint32_t* a, const uint32_t* b, uint32_t* c,
                       size_t rows, size_t inner, size_t cols, uint32_t p) {
  // Deferred reduction is safe while inner * (p-1)^2 fits in 64 bits; the
  // slow path below reduces every step and works for any 32-bit p.
  uint64_t sq = static_cast<uint64_t>(p - 1) * (p - 1);
  bool defer = sq == 0 || inner <= UINT64_MAX / (sq ? sq : 1);

  std::vector<uint64_t> acc(cols);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) acc[j] = 0;
    const uint32_t* arow = a + i * inner;
    for (size_t k = 0; k < inner; ++k) {
      uint64_t av = arow[k];
      if (av == 0) continue;
      const uint32_t* brow = b + k * cols;
      if (defer) {
        for (size_t j = 0; j < cols; ++j) acc[j] += av * brow[j];
      } else {
        for (size_t j = 0; j < cols; ++j) acc[j] = (acc[j] + av * brow[j]) % p;
      }
    }
    uint32_t* crow = c + i * cols;
    for (size_t j = 0; j < cols; ++j) {
      crow[j] = static_cast<uint32_t>(acc[j] % p);
    }
  }
}

}  // namespace utroots

#pragma once

#include <cstddef>
#include <cstdint>

namespace utroots {

// Dense row-major product C = A*B mod p.
// A is rows x inner, B is inner x cols, C is rows x cols. C must not alias
// A or B. Input entries must already lie in [0, p); outputs do too.
//
// matmul_mod dispatches to the fastest kernel the CPU supports. The choice
// can be forced with the environment variable UTROOTS_KERNEL=scalar|avx2
// (read once) or with set_active_kernel.
void matmul_mod(const uint32_t* a, const uint32_t* b, uint32_t* c,
                size_t rows, size_t inner, size_t cols, uint32_t p);

// Reference kernel, always available; 64-bit accumulation, no overflow
// restriction.
void matmul_mod_scalar(const uint32_t* a, const uint32_t* b, uint32_t* c,
                       size_t rows, size_t inner, size_t cols, uint32_t p);

// AVX2 kernel. Accumulates in 32 bits, so it requires
// inner * (p-1)^2 < 2^32; matmul_mod checks this and falls back to scalar.
// Callable only when kernel_available("avx2").
void matmul_mod_avx2(const uint32_t* a, const uint32_t* b, uint32_t* c,
                     size_t rows, size_t inner, size_t cols, uint32_t p);

bool kernel_available(const char* name);

// Name of the kernel matmul_mod currently dispatches to.
const char* active_kernel();

// Force a kernel ("scalar", "avx2", or "auto"). Returns false and leaves the
// selection unchanged if the kernel is not available on this CPU.
bool set_active_kernel(const char* name);

}  // namespace utroots

#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "utroots/ut_matrix.hpp"

namespace utroots::test {

// Every element of UT_n(F_p), by odometer over the strict upper entries.
// Only for sizes where p^(n(n-1)/2) is small.
inline std::vector<UtMatrix> all_unitriangular(uint32_t n, uint32_t p) {
  std::vector<std::pair<uint32_t, uint32_t>> slots;
  for (uint32_t i = 1; i <= n; ++i) {
    for (uint32_t j = i + 1; j <= n; ++j) slots.push_back({i, j});
  }
  std::vector<uint32_t> digits(slots.size(), 0);
  std::vector<UtMatrix> out;
  for (;;) {
    UtMatrix a = UtMatrix::identity(n, p);
    for (size_t t = 0; t < slots.size(); ++t) {
      a.set(slots[t].first, slots[t].second, digits[t]);
    }
    out.push_back(std::move(a));
    size_t t = 0;
    while (t < digits.size() && ++digits[t] == p) digits[t++] = 0;
    if (t == digits.size()) break;
  }
  return out;
}

// Independent of the kernel code path: signed arithmetic, mod every step.
inline std::vector<uint32_t> naive_matmul_mod(const std::vector<uint32_t>& a,
                                              const std::vector<uint32_t>& b,
                                              size_t rows, size_t inner,
                                              size_t cols, uint32_t p) {
  std::vector<uint32_t> c(rows * cols, 0);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      uint64_t acc = 0;
      for (size_t k = 0; k < inner; ++k) {
        acc = (acc + static_cast<uint64_t>(a[i * inner + k]) *
                         b[k * cols + j]) %
              p;
      }
      c[i * cols + j] = static_cast<uint32_t>(acc);
    }
  }
  return c;
}

// Builds a UtMatrix from explicit rows (diagonal and below must already be
// unitriangular; entries reduced mod p).
inline UtMatrix mat_from_rows(
    uint32_t p, std::initializer_list<std::initializer_list<int64_t>> rows) {
  uint32_t n = static_cast<uint32_t>(rows.size());
  UtMatrix a = UtMatrix::identity(n, p);
  uint32_t i = 1;
  for (const auto& row : rows) {
    uint32_t j = 1;
    for (int64_t v : row) {
      if (j > i) a.set(i, j, v);
      ++j;
    }
    ++i;
  }
  return a;
}

// Order by repeated multiplication; oracle for element_order.
inline uint64_t naive_order(const UtMatrix& a) {
  UtMatrix cur = a;
  uint64_t k = 1;
  while (!cur.is_identity()) {
    cur = cur * a;
    ++k;
  }
  return k;
}

}  // namespace utroots::test

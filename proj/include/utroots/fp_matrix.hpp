#pragma once

#include <cstdint>
#include <vector>

#include "utroots/fp.hpp"

namespace utroots {

class UtMatrix;

// Dense rectangular matrix over F_p, row-major, entries in [0, p).
// Used for the shift-action block algebra, where the matrices involved are
// not unitriangular (and not even square in the degenerate top block).
// Indices are 1-based like everywhere else in the library.
class FpMatrix {
 public:
  FpMatrix(uint32_t rows, uint32_t cols, uint32_t p);  // zero matrix
  static FpMatrix identity(uint32_t n, uint32_t p);
  explicit FpMatrix(const UtMatrix& u);

  uint32_t rows() const { return rows_; }
  uint32_t cols() const { return cols_; }
  uint32_t modulus() const { return p_; }

  uint32_t at(uint32_t i, uint32_t j) const;
  void set(uint32_t i, uint32_t j, int64_t v);  // reduces mod p

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix pow(uint64_t e) const;  // square matrices only

  bool operator==(const FpMatrix& o) const;
  bool operator!=(const FpMatrix& o) const { return !(*this == o); }

  bool is_zero() const;

  const uint32_t* data() const { return e_.data(); }

 private:
  uint32_t rows_, cols_, p_;
  std::vector<uint32_t> e_;
};

}  // namespace utroots

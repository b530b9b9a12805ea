#include "utroots/fp_matrix.hpp"

#include <string>

#include "utroots/kernels.hpp"
#include "utroots/ut_matrix.hpp"

namespace utroots {

FpMatrix::FpMatrix(uint32_t rows, uint32_t cols, uint32_t p)
    : rows_(rows), cols_(cols), p_(p), e_(size_t{rows} * cols, 0) {
  if (rows == 0 || cols == 0) throw MismatchError("empty matrix");
  if (!is_prime(p)) {
    throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  }
}

FpMatrix FpMatrix::identity(uint32_t n, uint32_t p) {
  FpMatrix m(n, n, p);
  for (uint32_t i = 1; i <= n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix::FpMatrix(const UtMatrix& u)
    : FpMatrix(u.dim(), u.dim(), u.modulus()) {
  for (uint32_t i = 1; i <= rows_; ++i) {
    for (uint32_t j = 1; j <= cols_; ++j) {
      e_[size_t{i - 1} * cols_ + (j - 1)] = u.at(i, j);
    }
  }
}

uint32_t FpMatrix::at(uint32_t i, uint32_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw MismatchError("index out of range");
  }
  return e_[size_t{i - 1} * cols_ + (j - 1)];
}

void FpMatrix::set(uint32_t i, uint32_t j, int64_t v) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) {
    throw MismatchError("index out of range");
  }
  e_[size_t{i - 1} * cols_ + (j - 1)] = reduce_signed(v, p_);
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (p_ != o.p_ || cols_ != o.rows_) {
    throw MismatchError("matrix product shape or modulus mismatch");
  }
  FpMatrix r(rows_, o.cols_, p_);
  matmul_mod(e_.data(), o.e_.data(), r.e_.data(), rows_, cols_, o.cols_, p_);
  return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_) {
    throw MismatchError("matrix sum shape or modulus mismatch");
  }
  FpMatrix r(rows_, cols_, p_);
  for (size_t t = 0; t < e_.size(); ++t) {
    uint32_t s = e_[t] + o.e_[t];
    if (s >= p_) s -= p_;
    r.e_[t] = s;
  }
  return r;
}

FpMatrix FpMatrix::pow(uint64_t e) const {
  if (rows_ != cols_) throw MismatchError("pow needs a square matrix");
  FpMatrix acc = identity(rows_, p_);
  FpMatrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool FpMatrix::is_zero() const {
  for (uint32_t v : e_) {
    if (v != 0) return false;
  }
  return true;
}

}  // namespace utroots

#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "utroots/fp.hpp"

namespace utroots {

// Upper unitriangular n x n matrix over F_p: unit diagonal, zeros below,
// arbitrary entries above. Stored dense row-major with all entries reduced
// into [0, p). Indices are 1-based. The group operations (product, inverse,
// power) stay inside the unitriangular matrices, so the invariant never
// needs rechecking after construction.
class UtMatrix {
 public:
  static UtMatrix identity(uint32_t n, uint32_t p);

  // e + gamma*e_{i,j}, requires 1 <= i < j <= n.
  static UtMatrix transvection(uint32_t n, uint32_t p, uint32_t i, uint32_t j,
                               int64_t gamma);

  uint32_t dim() const { return n_; }
  uint32_t modulus() const { return p_; }

  uint32_t at(uint32_t i, uint32_t j) const;
  // Strict upper entries only; reduces mod p.
  void set(uint32_t i, uint32_t j, int64_t v);

  UtMatrix operator*(const UtMatrix& o) const;
  UtMatrix inverse() const;
  // Negative exponents invert first.
  UtMatrix pow(int64_t e) const;

  bool operator==(const UtMatrix& o) const;
  bool operator!=(const UtMatrix& o) const { return !(*this == o); }
  bool is_identity() const;

  const uint32_t* data() const { return e_.data(); }

  // Compact byte key (dimension, modulus, strict upper entries); suitable
  // for hashing group elements.
  std::string key() const;

 private:
  UtMatrix(uint32_t n, uint32_t p);  // identity; named constructors validate

  uint32_t n_, p_;
  std::vector<uint32_t> e_;
};

// a^-1 b^-1 a b.
UtMatrix commutator(const UtMatrix& a, const UtMatrix& b);
// b^-1 a b.
UtMatrix conjugate(const UtMatrix& a, const UtMatrix& b);

// Multiplicative order; always a power of the modulus for these groups.
uint64_t element_order(const UtMatrix& a);

// One transvection factor t_{i,j}(gamma).
struct Transvection {
  uint32_t i, j, gamma;
  bool operator==(const Transvection&) const = default;
};

// Factor a into transvections, bands nearest the diagonal first, row order
// inside each band; the product of the factors in the returned order is a.
// Entries that are zero contribute no factor.
std::vector<Transvection> transvection_factors(const UtMatrix& a);

// Split a = f * rest where rest is a with its first row zeroed out and f is
// the unique unitriangular matrix with that property; f has nonzero
// off-diagonal entries only in row 1.
std::pair<UtMatrix, UtMatrix> split_first_row(const UtMatrix& a);

// Mirror split a = l * rest: rest is a with its last column zeroed, l has
// nonzero off-diagonal entries only in column n.
std::pair<UtMatrix, UtMatrix> split_last_column(const UtMatrix& a);

// Uniform strict upper entries from rng.
UtMatrix random_unitriangular(uint32_t n, uint32_t p, std::mt19937_64& rng);

// Text format: header line "p n", then n rows of n entries.
std::string format_matrix(const UtMatrix& a);
// Throws ParseError with a 1-based (row, col) diagnostic on malformed input,
// including any entry that breaks the unitriangular shape.
UtMatrix read_matrix(std::istream& in);
UtMatrix read_matrix(const std::string& text);

}  // namespace utroots

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "utroots/embeddings.hpp"
#include "utroots/fp_matrix.hpp"
#include "utroots/ut_matrix.hpp"

namespace utroots {

// Element of UT_n(F_p) wr C_q: a power of the cyclic shift together with a
// q-tuple of matrices. The shift acts on tuples by rotation; multiplication
// follows (shift^k, f) * (shift^k', f') = (shift^(k+k'), rot_k'(f) * f')
// with componentwise product, where rot moves every coordinate k' places to
// the right cyclically.
struct WreathElement {
  uint32_t shift = 0;            // in [0, q)
  std::vector<UtMatrix> base;    // size q

  uint32_t q() const { return static_cast<uint32_t>(base.size()); }
};

WreathElement wreath_identity(uint32_t n, uint32_t p, uint32_t q);
WreathElement operator*(const WreathElement& x, const WreathElement& y);
WreathElement inverse(const WreathElement& x);
bool operator==(const WreathElement& x, const WreathElement& y);
inline bool operator!=(const WreathElement& x, const WreathElement& y) {
  return !(x == y);
}

// (e, (a, a, ..., a)).
WreathElement diagonal_embedding(const UtMatrix& a, uint32_t q);

// Compact byte key (q, shift, entry bytes); for hashing group elements.
std::string wreath_key(const WreathElement& w);

// The data realizing UT_n(F_p) wr C_q inside UT_m(F_p), m = (n-1)p^s + 1:
// c is the image of the shift generator (one entry chain per gap, order q),
// families[l] are the generator images of the l-th conjugate copy of
// UT_n (families[0] comes from theta), and centers[l] is the l-th copy's
// image of t_{1,n}.
struct WreathEmbeddingData {
  IndexScheme scheme;
  UtMatrix c;
  std::vector<UtMatrix> c_pow;              // c^0 .. c^(q-1)
  std::vector<GeneratorImages> families;    // size q
  std::vector<InducedImages> tables;        // size q, matching families
  std::vector<UtMatrix> centers;            // size q
};

WreathEmbeddingData build_wreath_embedding(uint32_t n, uint32_t p, uint32_t s);

// Image of a wreath element: c^shift times the product over l of the l-th
// copy's image of base[l].
UtMatrix tau(const WreathEmbeddingData& d, const WreathElement& w);

struct WreathConditionReport {
  bool conjugation_chain = false;   // families cycle under conjugation by c
  bool families_embed = false;      // every family passes verify_embedding
  bool cross_commute = false;       // copy 1 commutes with copies 2..q
  bool centers_disjoint = false;    // center subgroups pairwise trivial
  std::vector<std::string> witnesses;

  bool ok() const {
    return conjugation_chain && families_embed && cross_commute &&
           centers_disjoint;
  }
};

// Recomputes all four structural conditions from the data (centers are
// re-derived from each family's induced images, not trusted from the
// struct).
WreathConditionReport verify_wreath_conditions(const WreathEmbeddingData& d);

// The q x q block algebra describing how conjugation by the shift chain
// acts on one level of row blocks: A is the unitriangular chain block, B is
// zero except for an alternating last row, M_i = A^-i B A^i, and v is the
// alternating row vector (all-ones when p = 2).
struct ShiftBlockMatrices {
  uint32_t p = 0, q = 0;
  FpMatrix A, B, v;          // v is 1 x q
  std::vector<FpMatrix> M;   // M[i] = A^-i B A^i, i = 0..q-1
};

ShiftBlockMatrices shift_block_matrices(uint32_t p, uint32_t s);

struct ShiftBlockReport {
  bool annihilation = false;  // v * M_i = 0 for i = 1..q-1
  bool shift_sum = false;     // sum_i v * A^i = (0,...,0,1)
  bool partition = false;     // sum_i M_i = identity
  std::string detail;         // first failing identity, empty when all hold

  bool ok() const { return annihilation && shift_sum && partition; }
};

ShiftBlockReport verify_shift_blocks(const ShiftBlockMatrices& sb);

// Level blocks: the m positions split into n consecutive groups
// I_1 = {1} and I_k = {(k-2)q+2, ..., (k-1)q+1} for k >= 2. An element
// supported on I_k x I_{k+1} corresponds to an |I_k| x |I_{k+1}| coefficient
// matrix; conjugation by c acts on these by A on the right and A^-1 on the
// left (no left action on the singleton top block).
UtMatrix block_element(const IndexScheme& ix, uint32_t k, const FpMatrix& coef);
// Throws MismatchError if h has support outside I_k x I_{k+1}.
FpMatrix block_matrix(const IndexScheme& ix, uint32_t k, const UtMatrix& h);

// tau after diagonal_embedding agrees with the first-row embedding: checked
// on every adjacent transvection and on `trials` seeded random elements.
bool diagonal_route_matches_fr(uint32_t n, uint32_t p, uint32_t s,
                               uint32_t trials, uint64_t seed);

}  // namespace utroots

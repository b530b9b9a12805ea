#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "utroots/ut_matrix.hpp"

namespace utroots {

// Index bookkeeping for refining an n x n unitriangular matrix into an
// m x m one with q = p^s new slots per gap: each gap (k, k+1) receives q-1
// inserted labels sitting strictly between k and k+1. Positions in the big
// matrix are 1-based; the integer label i lands at (i-1)q + 1 and the j-th
// inserted label of gap k at (k-1)q + 1 + j.
class IndexScheme {
 public:
  IndexScheme(uint32_t n, uint32_t p, uint32_t s);

  uint32_t n, p, s;
  uint32_t q;  // p^s
  uint32_t m;  // (n-1)q + 1

  // Position of integer label i, 1 <= i <= n.
  uint32_t pos_int(uint32_t i) const;
  // Position of the j-th inserted label in gap k, 1 <= k < n, 1 <= j < q.
  uint32_t pos_gap(uint32_t k, uint32_t j) const;
};

// Images of the adjacent transvections t_{k,k+1}, k = 1..n-1, inside
// UT_m(F_p). Everything an embedding of UT_n is determined by.
struct GeneratorImages {
  uint32_t n = 0, p = 0, m = 0;
  std::string name;  // "simple", "phi_fr", "psi_lc", "theta", "custom"
  std::vector<UtMatrix> images;  // images[k-1] = image of t_{k,k+1}

  const UtMatrix& image_of_adjacent(uint32_t k) const;
};

// t_{k,k+1} -> t'_{b_k, b_{k+1}} for strictly increasing breakpoints
// b_1 < ... < b_n = m.
GeneratorImages simple_embedding(uint32_t p,
                                 const std::vector<uint32_t>& breakpoints);

// The root-providing embedding anchored on first rows: t_{1,2} maps to a
// single transvection, every other t_{k,k+1} maps to the product of q
// parallel transvections (one per replica slot).
GeneratorImages phi_fr(uint32_t n, uint32_t p, uint32_t s);

// Mirror construction anchored on last columns: t_{n-1,n} maps to a single
// transvection.
GeneratorImages psi_lc(uint32_t n, uint32_t p, uint32_t s);

// Row-supported variant: t_{k,k+1} maps to a product of transvections that
// all start at row pos(k), with alternating signs (all + when p = 2).
GeneratorImages theta(uint32_t n, uint32_t p, uint32_t s);

// Images of every t_{i,j}, precomputed from the adjacent images through the
// commutator recursion image(t_{i,j}) = [image(t_{i,j-1}), image(t_{j-1,j})].
class InducedImages {
 public:
  explicit InducedImages(const GeneratorImages& gi);

  uint32_t n() const { return n_; }
  uint32_t p() const { return p_; }
  uint32_t m() const { return m_; }

  const UtMatrix& image(uint32_t i, uint32_t j) const;
  UtMatrix image(uint32_t i, uint32_t j, uint32_t gamma) const;

 private:
  uint32_t n_, p_, m_;
  std::vector<UtMatrix> table_;  // (i,j) -> image of t_{i,j}(1)
};

// Image of an arbitrary element: factor a into transvections and multiply
// the factor images. For a genuine embedding this is the unique homomorphic
// extension of the generator images.
UtMatrix extend_hom(const InducedImages& t, const UtMatrix& a);
UtMatrix extend_hom(const GeneratorImages& gi, const UtMatrix& a);

struct VerificationReport {
  bool relations_hold = false;
  bool injective = false;
  bool generator_orders_ok = false;
  std::vector<std::string> witnesses;  // failures, human readable

  bool ok() const {
    return relations_hold && injective && generator_orders_ok;
  }
};

// Checks the defining relation families of UT_n on the induced images
// ([t_{i,j}, t_{j,k}] = t_{i,k}; disjoint pairs commute; p-th powers die),
// injectivity via the center criterion (image of t_{1,n} nontrivial; a
// homomorphism from a p-group is injective iff its kernel misses the
// center), and that every adjacent image has order exactly p.
VerificationReport verify_embedding(const GeneratorImages& gi);

// Direct entry-placement form of extend_hom(phi_fr(...), a): replicas of the
// zero-first-row part plus the original first row spread over the integer
// label columns. Computed without any group operation, so it serves as an
// independent cross-check of the generator route.
UtMatrix phi_closed_form(const IndexScheme& ix, const UtMatrix& a);

// Same for psi_lc: replicas of the zero-last-column part plus the original
// last column on the integer label rows.
UtMatrix psi_closed_form(const IndexScheme& ix, const UtMatrix& a);

}  // namespace utroots

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "utroots/embeddings.hpp"

namespace utroots {

// Everything needed to certify "x is a root of an embedded element":
// the instance, the embedding, the root x, its factor sequence, and the
// embedded target that x^(q*r) must reproduce (r = 1 except for the
// single-transvection variant).
struct RootWitness {
  uint32_t n = 0, p = 0, s = 0;
  uint32_t q = 0;      // p^s
  uint32_t m = 0;      // ambient dimension
  uint32_t r = 1;      // extra coprime exponent, transvection variant only
  std::string variant; // "fr", "lc", "transvection"
  UtMatrix a;          // the source element (or the transvection itself)
  GeneratorImages embedding;
  UtMatrix x;                    // the root, in UT_m
  std::vector<UtMatrix> factors; // product in order equals x
  UtMatrix target;               // embedded image of a
};

// q-th root of the first-row embedding's image of a: builds the factor
// chain x_{n-1} ... x_1 whose product x satisfies x^q = image of a.
RootWitness qth_root_fr(const UtMatrix& a, uint32_t s);

// Mirror witness for the last-column embedding; the factor product runs
// x_1 x_2 ... x_{n-1}.
RootWitness qth_root_lc(const UtMatrix& a, uint32_t s);

// Root of a single embedded transvection with an extra coprime exponent:
// x in UT_{n+q-1} with x^(q*r) equal to the image of t_{i,j}(gamma) under
// the simple embedding that inserts q-1 slots right after position i.
// Requires gcd(r, p) = 1 and r >= 1.
RootWitness transvection_root(uint32_t n, uint32_t p, uint32_t s, uint32_t r,
                              uint32_t i, uint32_t j, uint32_t gamma);

struct RootCheck {
  bool power_ok = false;    // x^(q*r) == target
  bool factors_ok = false;  // product of factors == x
  std::string detail;       // first mismatch when something fails

  bool ok() const { return power_ok && factors_ok; }
};

// Recomputes both properties from scratch.
RootCheck verify_root(const RootWitness& w);

}  // namespace utroots

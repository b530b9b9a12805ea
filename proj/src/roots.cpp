#include "utroots/roots.hpp"

#include <numeric>

namespace utroots {

namespace {

// All factor matrices below are built by entry placement: each one is a
// product of transvections whose supports chain without overlap (every
// factor's target position only ever feeds already-multiplied factors), so
// the product has no cross terms and equals e + (sum of the entries).

UtMatrix fr_factor(const IndexScheme& ix, const UtMatrix& a, uint32_t k) {
  UtMatrix x = UtMatrix::identity(ix.m, ix.p);
  // column k+1 of a enters at the first inserted slot of gap k
  for (uint32_t i = 1; i <= k; ++i) {
    x.set(ix.pos_int(i), ix.pos_gap(k, 1), a.at(i, k + 1));
  }
  for (uint32_t j = 1; j + 1 < ix.q; ++j) {
    x.set(ix.pos_gap(k, j), ix.pos_gap(k, j + 1), 1);
  }
  x.set(ix.pos_gap(k, ix.q - 1), ix.pos_int(k + 1), 1);
  return x;
}

UtMatrix lc_factor(const IndexScheme& ix, const UtMatrix& a, uint32_t k) {
  // factor k consumes row n-k of a
  uint32_t row = ix.n - k;
  UtMatrix x = UtMatrix::identity(ix.m, ix.p);
  for (uint32_t l = row + 1; l <= ix.n; ++l) {
    x.set(ix.pos_gap(row, ix.q - 1), ix.pos_int(l), a.at(row, l));
  }
  x.set(ix.pos_int(row), ix.pos_gap(row, 1), 1);
  for (uint32_t j = 1; j + 1 < ix.q; ++j) {
    x.set(ix.pos_gap(row, j), ix.pos_gap(row, j + 1), 1);
  }
  return x;
}

}  // namespace

RootWitness qth_root_fr(const UtMatrix& a, uint32_t s) {
  IndexScheme ix(a.dim(), a.modulus(), s);
  RootWitness w{ix.n, ix.p, s, ix.q, ix.m, 1, "fr", a,
                phi_fr(ix.n, ix.p, s), UtMatrix::identity(ix.m, ix.p),
                {},   phi_closed_form(ix, a)};
  for (uint32_t k = ix.n - 1; k >= 1; --k) {
    w.factors.push_back(fr_factor(ix, a, k));
  }
  for (const UtMatrix& f : w.factors) w.x = w.x * f;
  return w;
}

RootWitness qth_root_lc(const UtMatrix& a, uint32_t s) {
  IndexScheme ix(a.dim(), a.modulus(), s);
  RootWitness w{ix.n, ix.p, s, ix.q, ix.m, 1, "lc", a,
                psi_lc(ix.n, ix.p, s), UtMatrix::identity(ix.m, ix.p),
                {},   psi_closed_form(ix, a)};
  for (uint32_t k = 1; k <= ix.n - 1; ++k) {
    w.factors.push_back(lc_factor(ix, a, k));
  }
  for (const UtMatrix& f : w.factors) w.x = w.x * f;
  return w;
}

RootWitness transvection_root(uint32_t n, uint32_t p, uint32_t s, uint32_t r,
                              uint32_t i, uint32_t j, uint32_t gamma) {
  if (!(1 <= i && i < j && j <= n)) {
    throw MismatchError("transvection needs 1 <= i < j <= n");
  }
  if (r < 1 || std::gcd(r, p) != 1) {
    throw MismatchError("exponent r must be coprime to p");
  }
  IndexScheme ix(2, p, s);  // only for q = p^s validation
  uint32_t q = ix.q;
  uint32_t m = n + q - 1;

  // q-1 slots inserted right after position i: old position l keeps its
  // place for l <= i and moves to l+q-1 after.
  std::vector<uint32_t> breakpoints;
  for (uint32_t l = 1; l <= n; ++l) {
    breakpoints.push_back(l <= i ? l : l + q - 1);
  }

  RootWitness w{n,
                p,
                s,
                q,
                m,
                r,
                "transvection",
                UtMatrix::transvection(n, p, i, j, gamma),
                simple_embedding(p, breakpoints),
                UtMatrix::identity(m, p),
                {},
                UtMatrix::transvection(m, p, i, j + q - 1, gamma)};

  // chain i -> i+1 -> ... -> i+q-1 -> j+q-1 whose q-th power collapses to
  // the single entry (i, j+q-1) with coefficient (r^-1 gamma) * 1 * ... * 1;
  // the remaining r-th power then scales it back to gamma
  uint32_t g1 = (Fp(gamma, p) * Fp(r, p).inverse()).value();
  UtMatrix x = UtMatrix::identity(m, p);
  x.set(i, i + 1, g1);
  for (uint32_t t = 1; t + 1 < q; ++t) x.set(i + t, i + t + 1, 1);
  x.set(i + q - 1, j + q - 1, 1);
  w.x = x;
  w.factors.push_back(x);
  return w;
}

RootCheck verify_root(const RootWitness& w) {
  RootCheck c;
  uint64_t exp = static_cast<uint64_t>(w.q) * w.r;
  UtMatrix power = w.x.pow(static_cast<int64_t>(exp));
  c.power_ok = power == w.target;
  UtMatrix prod = UtMatrix::identity(w.m, w.p);
  for (const UtMatrix& f : w.factors) prod = prod * f;
  c.factors_ok = prod == w.x;
  if (!c.power_ok) {
    for (uint32_t i = 1; i <= w.m && c.detail.empty(); ++i) {
      for (uint32_t j = i + 1; j <= w.m; ++j) {
        if (power.at(i, j) != w.target.at(i, j)) {
          c.detail = "x^" + std::to_string(exp) + " differs from the target at (" +
                     std::to_string(i) + "," + std::to_string(j) + ")";
          break;
        }
      }
    }
  } else if (!c.factors_ok) {
    c.detail = "factor product differs from x";
  }
  return c;
}

}  // namespace utroots

#include "utroots/wreath.hpp"

namespace utroots {

namespace {

void check_compatible(const WreathElement& x, const WreathElement& y) {
  if (x.q() != y.q() || x.q() == 0) {
    throw MismatchError("wreath elements over different cyclic groups");
  }
  if (x.base[0].dim() != y.base[0].dim() ||
      x.base[0].modulus() != y.base[0].modulus()) {
    throw MismatchError("wreath elements over different base groups");
  }
}

}  // namespace

WreathElement wreath_identity(uint32_t n, uint32_t p, uint32_t q) {
  if (q == 0) throw MismatchError("need q >= 1");
  WreathElement w;
  w.shift = 0;
  w.base.assign(q, UtMatrix::identity(n, p));
  return w;
}

WreathElement operator*(const WreathElement& x, const WreathElement& y) {
  check_compatible(x, y);
  uint32_t q = x.q();
  WreathElement z;
  z.shift = (x.shift + y.shift) % q;
  z.base.reserve(q);
  for (uint32_t t = 0; t < q; ++t) {
    // rotate x's tuple right by y.shift, then multiply componentwise
    z.base.push_back(x.base[(t + q - y.shift % q) % q] * y.base[t]);
  }
  return z;
}

WreathElement inverse(const WreathElement& x) {
  uint32_t q = x.q();
  WreathElement z;
  z.shift = (q - x.shift % q) % q;
  z.base.reserve(q);
  for (uint32_t t = 0; t < q; ++t) {
    z.base.push_back(x.base[(t + x.shift) % q].inverse());
  }
  return z;
}

bool operator==(const WreathElement& x, const WreathElement& y) {
  return x.shift == y.shift && x.base == y.base;
}

WreathElement diagonal_embedding(const UtMatrix& a, uint32_t q) {
  if (q == 0) throw MismatchError("need q >= 1");
  WreathElement w;
  w.shift = 0;
  w.base.assign(q, a);
  return w;
}

std::string wreath_key(const WreathElement& w) {
  std::string k;
  k.push_back(static_cast<char>(w.q() & 0xff));
  k.push_back(static_cast<char>(w.shift & 0xff));
  for (const UtMatrix& b : w.base) k += b.key();
  return k;
}

WreathEmbeddingData build_wreath_embedding(uint32_t n, uint32_t p,
                                           uint32_t s) {
  IndexScheme ix(n, p, s);
  uint32_t q = ix.q;

  // shift image: one chain through the inserted slots of every gap; the
  // chains live on disjoint consecutive position blocks, so each has order
  // q and they commute
  UtMatrix c = UtMatrix::identity(ix.m, ix.p);
  for (uint32_t k = 1; k < n; ++k) {
    for (uint32_t j = 1; j < q; ++j) {
      uint32_t from = ix.pos_gap(k, j);
      uint32_t to = (j + 1 < q) ? ix.pos_gap(k, j + 1) : ix.pos_int(k + 1);
      c.set(from, to, 1);
    }
  }

  WreathEmbeddingData d{ix, c, {}, {}, {}, {}};
  d.c_pow.push_back(UtMatrix::identity(ix.m, ix.p));
  for (uint32_t t = 1; t < q; ++t) d.c_pow.push_back(d.c_pow[t - 1] * c);

  UtMatrix c_inv = c.inverse();
  d.families.push_back(theta(n, p, s));
  for (uint32_t l = 2; l <= q; ++l) {
    GeneratorImages fam;
    fam.n = n;
    fam.p = p;
    fam.m = ix.m;
    fam.name = "custom";
    for (const UtMatrix& g : d.families[l - 2].images) {
      fam.images.push_back(c_inv * g * c);
    }
    d.families.push_back(std::move(fam));
  }
  for (const GeneratorImages& fam : d.families) {
    d.tables.emplace_back(fam);
  }
  for (uint32_t l = 1; l <= q; ++l) {
    d.centers.push_back(d.tables[l - 1].image(1, n));
  }
  return d;
}

UtMatrix tau(const WreathEmbeddingData& d, const WreathElement& w) {
  uint32_t q = d.scheme.q;
  if (w.q() != q) throw MismatchError("wreath element has wrong cyclic order");
  UtMatrix r = d.c_pow[w.shift % q];
  for (uint32_t l = 0; l < q; ++l) {
    r = r * extend_hom(d.tables[l], w.base[l]);
  }
  return r;
}

WreathConditionReport verify_wreath_conditions(const WreathEmbeddingData& d) {
  WreathConditionReport rep;
  uint32_t n = d.scheme.n, p = d.scheme.p, q = d.scheme.q;

  // (1) conjugation by c cycles the families, and c itself has order q
  rep.conjugation_chain = element_order(d.c) == q;
  if (!rep.conjugation_chain) {
    rep.witnesses.push_back("shift image does not have order q");
  }
  UtMatrix c_inv = d.c.inverse();
  for (uint32_t l = 1; l <= q; ++l) {
    const GeneratorImages& cur = d.families[l - 1];
    const GeneratorImages& next = d.families[l % q];
    for (uint32_t k = 1; k < n; ++k) {
      if (conjugate(cur.images[k - 1], d.c) != next.images[k - 1]) {
        rep.conjugation_chain = false;
        rep.witnesses.push_back("conjugate of copy " + std::to_string(l) +
                                " generator " + std::to_string(k) +
                                " is not the next copy's generator");
      }
    }
  }

  // (2) every copy is an embedded UT_n
  rep.families_embed = true;
  for (uint32_t l = 1; l <= q; ++l) {
    VerificationReport r = verify_embedding(d.families[l - 1]);
    if (!r.ok()) {
      rep.families_embed = false;
      rep.witnesses.push_back("copy " + std::to_string(l) +
                              " fails embedding verification: " +
                              (r.witnesses.empty() ? "unknown"
                                                   : r.witnesses.front()));
    }
  }

  // (3) the first copy commutes with every other copy elementwise on
  // generators, which extends to the generated subgroups
  rep.cross_commute = true;
  for (uint32_t l = 2; l <= q; ++l) {
    for (uint32_t k = 1; k < n; ++k) {
      for (uint32_t j = 1; j < n; ++j) {
        if (!commutator(d.families[0].images[k - 1],
                        d.families[l - 1].images[j - 1])
                 .is_identity()) {
          rep.cross_commute = false;
          rep.witnesses.push_back(
              "generators " + std::to_string(k) + " of copy 1 and " +
              std::to_string(j) + " of copy " + std::to_string(l) +
              " do not commute");
        }
      }
    }
  }

  // (4) center images generate q pairwise disjoint subgroups of order p;
  // recompute them from the families instead of trusting d.centers
  rep.centers_disjoint = true;
  std::vector<UtMatrix> z;
  for (uint32_t l = 1; l <= q; ++l) {
    z.push_back(InducedImages(d.families[l - 1]).image(1, n));
  }
  for (uint32_t l = 0; l < q; ++l) {
    if (element_order(z[l]) != p) {
      rep.centers_disjoint = false;
      rep.witnesses.push_back("center image of copy " + std::to_string(l + 1) +
                              " does not have order p");
    }
  }
  for (uint32_t l = 0; l < q; ++l) {
    for (uint32_t l2 = 0; l2 < q; ++l2) {
      if (l == l2) continue;
      UtMatrix pw = z[l];
      for (uint32_t t = 1; t < p; ++t) {
        if (pw == z[l2]) {
          rep.centers_disjoint = false;
          rep.witnesses.push_back("center subgroups of copies " +
                                  std::to_string(l + 1) + " and " +
                                  std::to_string(l2 + 1) + " intersect");
        }
        pw = pw * z[l];
      }
    }
  }
  return rep;
}

ShiftBlockMatrices shift_block_matrices(uint32_t p, uint32_t s) {
  IndexScheme ix(2, p, s);  // validates p, s and computes q
  uint32_t q = ix.q;
  ShiftBlockMatrices sb{p, q, FpMatrix::identity(q, p), FpMatrix(q, q, p),
                        FpMatrix(1, q, p), {}};
  for (uint32_t j = 1; j < q; ++j) sb.A.set(j, j + 1, 1);
  for (uint32_t j = 1; j <= q; ++j) {
    int64_t sign = (j % 2 == 1) ? 1 : -1;
    sb.B.set(q, j, sign);
    sb.v.set(1, j, sign);
  }
  // A is unitriangular, so its inverse is exact over F_p
  UtMatrix a_ut = UtMatrix::identity(q, p);
  for (uint32_t j = 1; j < q; ++j) a_ut.set(j, j + 1, 1);
  FpMatrix a_inv(a_ut.inverse());
  sb.M.push_back(sb.B);
  for (uint32_t i = 1; i < q; ++i) {
    sb.M.push_back(a_inv * sb.M[i - 1] * sb.A);
  }
  return sb;
}

ShiftBlockReport verify_shift_blocks(const ShiftBlockMatrices& sb) {
  ShiftBlockReport rep;
  uint32_t q = sb.q, p = sb.p;

  rep.annihilation = true;
  for (uint32_t i = 1; i < q; ++i) {
    if (!(sb.v * sb.M[i]).is_zero()) {
      rep.annihilation = false;
      if (rep.detail.empty()) {
        rep.detail = "row annihilation fails at block " + std::to_string(i);
      }
    }
  }

  FpMatrix sum_v(1, q, p);
  for (uint32_t i = 0; i < q; ++i) {
    sum_v = sum_v + sb.v * sb.A.pow(i);
  }
  FpMatrix unit_last(1, q, p);
  unit_last.set(1, q, 1);
  rep.shift_sum = sum_v == unit_last;
  if (!rep.shift_sum && rep.detail.empty()) {
    rep.detail = "shifted row sum is not the last unit vector";
  }

  FpMatrix sum_m(q, q, p);
  for (uint32_t i = 0; i < q; ++i) sum_m = sum_m + sb.M[i];
  rep.partition = sum_m == FpMatrix::identity(q, p);
  if (!rep.partition && rep.detail.empty()) {
    rep.detail = "blocks do not sum to the identity";
  }

  return rep;
}

namespace {

// positions of level block k: I_1 = {1}, I_k = {(k-2)q+2 .. (k-1)q+1}
std::vector<uint32_t> level_positions(const IndexScheme& ix, uint32_t k) {
  if (k < 1 || k > ix.n) throw MismatchError("level out of range");
  if (k == 1) return {1};
  std::vector<uint32_t> pos;
  for (uint32_t j = 1; j < ix.q; ++j) pos.push_back(ix.pos_gap(k - 1, j));
  pos.push_back(ix.pos_int(k));
  return pos;
}

}  // namespace

UtMatrix block_element(const IndexScheme& ix, uint32_t k,
                       const FpMatrix& coef) {
  std::vector<uint32_t> rows = level_positions(ix, k);
  std::vector<uint32_t> cols = level_positions(ix, k + 1);
  if (coef.rows() != rows.size() || coef.cols() != cols.size() ||
      coef.modulus() != ix.p) {
    throw MismatchError("coefficient block has wrong shape");
  }
  UtMatrix h = UtMatrix::identity(ix.m, ix.p);
  for (uint32_t i = 1; i <= coef.rows(); ++i) {
    for (uint32_t j = 1; j <= coef.cols(); ++j) {
      h.set(rows[i - 1], cols[j - 1], coef.at(i, j));
    }
  }
  return h;
}

FpMatrix block_matrix(const IndexScheme& ix, uint32_t k, const UtMatrix& h) {
  std::vector<uint32_t> rows = level_positions(ix, k);
  std::vector<uint32_t> cols = level_positions(ix, k + 1);
  FpMatrix coef(static_cast<uint32_t>(rows.size()),
                static_cast<uint32_t>(cols.size()), ix.p);
  for (uint32_t i = 1; i <= coef.rows(); ++i) {
    for (uint32_t j = 1; j <= coef.cols(); ++j) {
      coef.set(i, j, h.at(rows[i - 1], cols[j - 1]));
    }
  }
  // everything outside the block must be trivial
  UtMatrix rebuilt = block_element(ix, k, coef);
  if (rebuilt != h) {
    throw MismatchError("element has support outside the level block");
  }
  return coef;
}

bool diagonal_route_matches_fr(uint32_t n, uint32_t p, uint32_t s,
                               uint32_t trials, uint64_t seed) {
  WreathEmbeddingData d = build_wreath_embedding(n, p, s);
  IndexScheme ix = d.scheme;
  InducedImages phi(phi_fr(n, p, s));
  for (uint32_t k = 1; k < n; ++k) {
    UtMatrix gen = UtMatrix::transvection(n, p, k, k + 1, 1);
    if (tau(d, diagonal_embedding(gen, ix.q)) != phi.image(k, k + 1)) {
      return false;
    }
  }
  std::mt19937_64 rng(seed);
  for (uint32_t t = 0; t < trials; ++t) {
    UtMatrix a = random_unitriangular(n, p, rng);
    if (tau(d, diagonal_embedding(a, ix.q)) != phi_closed_form(ix, a)) {
      return false;
    }
  }
  return true;
}

}  // namespace utroots

#include "utroots/embeddings.hpp"

namespace utroots {

namespace {

uint32_t checked_pow(uint32_t p, uint32_t s) {
  uint64_t q = 1;
  for (uint32_t t = 0; t < s; ++t) {
    q *= p;
    if (q > (1u << 20)) throw MismatchError("p^s too large");
  }
  return static_cast<uint32_t>(q);
}

}  // namespace

IndexScheme::IndexScheme(uint32_t n_, uint32_t p_, uint32_t s_)
    : n(n_), p(p_), s(s_) {
  if (n < 2) throw MismatchError("need n >= 2");
  if (s < 1) throw MismatchError("need s >= 1");
  if (!is_prime(p)) {
    throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  }
  q = checked_pow(p, s);
  m = (n - 1) * q + 1;
}

uint32_t IndexScheme::pos_int(uint32_t i) const {
  if (i < 1 || i > n) throw MismatchError("integer label out of range");
  return (i - 1) * q + 1;
}

uint32_t IndexScheme::pos_gap(uint32_t k, uint32_t j) const {
  if (k < 1 || k >= n || j < 1 || j >= q) {
    throw MismatchError("gap label out of range");
  }
  return (k - 1) * q + 1 + j;
}

const UtMatrix& GeneratorImages::image_of_adjacent(uint32_t k) const {
  if (k < 1 || k >= n) throw MismatchError("generator index out of range");
  return images[k - 1];
}

GeneratorImages simple_embedding(uint32_t p,
                                 const std::vector<uint32_t>& breakpoints) {
  if (breakpoints.size() < 2) throw MismatchError("need at least 2 breakpoints");
  for (size_t t = 0; t + 1 < breakpoints.size(); ++t) {
    if (breakpoints[t] >= breakpoints[t + 1]) {
      throw MismatchError("breakpoints must be strictly increasing");
    }
  }
  if (breakpoints.front() < 1) throw MismatchError("breakpoints start at 1");
  GeneratorImages gi;
  gi.n = static_cast<uint32_t>(breakpoints.size());
  gi.p = p;
  gi.m = breakpoints.back();
  gi.name = "simple";
  for (uint32_t k = 1; k < gi.n; ++k) {
    gi.images.push_back(UtMatrix::transvection(gi.m, p, breakpoints[k - 1],
                                               breakpoints[k], 1));
  }
  return gi;
}

GeneratorImages phi_fr(uint32_t n, uint32_t p, uint32_t s) {
  IndexScheme ix(n, p, s);
  GeneratorImages gi;
  gi.n = n;
  gi.p = p;
  gi.m = ix.m;
  gi.name = "phi_fr";
  for (uint32_t k = 1; k < n; ++k) {
    UtMatrix img = UtMatrix::transvection(ix.m, p, ix.pos_int(k),
                                          ix.pos_int(k + 1), 1);
    if (k >= 2) {
      // replica transvections live between the inserted labels of the two
      // neighbouring gaps; all factors commute, so entry placement is exact
      for (uint32_t j = 1; j < ix.q; ++j) {
        img.set(ix.pos_gap(k - 1, j), ix.pos_gap(k, j), 1);
      }
    }
    gi.images.push_back(img);
  }
  return gi;
}

GeneratorImages psi_lc(uint32_t n, uint32_t p, uint32_t s) {
  IndexScheme ix(n, p, s);
  GeneratorImages gi;
  gi.n = n;
  gi.p = p;
  gi.m = ix.m;
  gi.name = "psi_lc";
  for (uint32_t k = 1; k < n; ++k) {
    UtMatrix img = UtMatrix::transvection(ix.m, p, ix.pos_int(k),
                                          ix.pos_int(k + 1), 1);
    if (k <= n - 2) {
      for (uint32_t j = 1; j < ix.q; ++j) {
        img.set(ix.pos_gap(k, j), ix.pos_gap(k + 1, j), 1);
      }
    }
    gi.images.push_back(img);
  }
  return gi;
}

GeneratorImages theta(uint32_t n, uint32_t p, uint32_t s) {
  IndexScheme ix(n, p, s);
  GeneratorImages gi;
  gi.n = n;
  gi.p = p;
  gi.m = ix.m;
  gi.name = "theta";
  for (uint32_t k = 1; k < n; ++k) {
    UtMatrix img = UtMatrix::transvection(ix.m, p, ix.pos_int(k),
                                          ix.pos_int(k + 1), 1);
    for (uint32_t j = 1; j < ix.q; ++j) {
      // signs alternate +,-,+,...; mod 2 they are all +
      int64_t sign = (j % 2 == 1) ? 1 : -1;
      img.set(ix.pos_int(k), ix.pos_gap(k, j), sign);
    }
    gi.images.push_back(img);
  }
  return gi;
}

InducedImages::InducedImages(const GeneratorImages& gi)
    : n_(gi.n), p_(gi.p), m_(gi.m) {
  if (gi.images.size() + 1 != gi.n) {
    throw MismatchError("expected n-1 generator images");
  }
  table_.reserve(size_t{n_} * n_);
  UtMatrix id = UtMatrix::identity(m_, p_);
  for (size_t t = 0; t < size_t{n_} * n_; ++t) table_.push_back(id);
  auto slot = [&](uint32_t i, uint32_t j) -> UtMatrix& {
    return table_[size_t{i - 1} * n_ + (j - 1)];
  };
  for (uint32_t k = 1; k < n_; ++k) slot(k, k + 1) = gi.images[k - 1];
  for (uint32_t band = 2; band < n_; ++band) {
    for (uint32_t i = 1; i + band <= n_; ++i) {
      uint32_t j = i + band;
      slot(i, j) = commutator(slot(i, j - 1), slot(j - 1, j));
    }
  }
}

const UtMatrix& InducedImages::image(uint32_t i, uint32_t j) const {
  if (!(1 <= i && i < j && j <= n_)) {
    throw MismatchError("transvection index out of range");
  }
  return table_[size_t{i - 1} * n_ + (j - 1)];
}

UtMatrix InducedImages::image(uint32_t i, uint32_t j, uint32_t gamma) const {
  return image(i, j).pow(gamma % p_);
}

UtMatrix extend_hom(const InducedImages& t, const UtMatrix& a) {
  if (a.dim() != t.n() || a.modulus() != t.p()) {
    throw MismatchError("element does not match the embedding's source group");
  }
  UtMatrix r = UtMatrix::identity(t.m(), t.p());
  for (const Transvection& f : transvection_factors(a)) {
    r = r * t.image(f.i, f.j, f.gamma);
  }
  return r;
}

UtMatrix extend_hom(const GeneratorImages& gi, const UtMatrix& a) {
  return extend_hom(InducedImages(gi), a);
}

namespace {

std::string tname(uint32_t i, uint32_t j) {
  return "t(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

VerificationReport verify_embedding(const GeneratorImages& gi) {
  InducedImages t(gi);
  uint32_t n = gi.n, p = gi.p;
  VerificationReport rep;
  rep.relations_hold = true;
  rep.generator_orders_ok = true;

  // chained pairs multiply up one level
  for (uint32_t i = 1; i <= n; ++i) {
    for (uint32_t j = i + 1; j <= n; ++j) {
      for (uint32_t k = j + 1; k <= n; ++k) {
        if (commutator(t.image(i, j), t.image(j, k)) != t.image(i, k)) {
          rep.relations_hold = false;
          rep.witnesses.push_back("[" + tname(i, j) + "," + tname(j, k) +
                                  "] != " + tname(i, k));
        }
      }
    }
  }
  // disjoint pairs commute
  for (uint32_t i = 1; i < n; ++i) {
    for (uint32_t j = i + 1; j <= n; ++j) {
      for (uint32_t k = 1; k < n; ++k) {
        for (uint32_t l = k + 1; l <= n; ++l) {
          if (j == k || i == l) continue;
          if (!commutator(t.image(i, j), t.image(k, l)).is_identity()) {
            rep.relations_hold = false;
            rep.witnesses.push_back("[" + tname(i, j) + "," + tname(k, l) +
                                    "] != e");
          }
        }
      }
    }
  }
  // exponent p
  for (uint32_t i = 1; i < n; ++i) {
    for (uint32_t j = i + 1; j <= n; ++j) {
      if (!t.image(i, j).pow(p).is_identity()) {
        rep.relations_hold = false;
        rep.witnesses.push_back(tname(i, j) + "^p != e");
      }
    }
  }

  rep.injective = !t.image(1, n).is_identity();
  if (!rep.injective) {
    rep.witnesses.push_back("image of " + tname(1, n) +
                            " is trivial, so the kernel meets the center");
  }

  for (uint32_t k = 1; k < n; ++k) {
    if (element_order(gi.image_of_adjacent(k)) != p) {
      rep.generator_orders_ok = false;
      rep.witnesses.push_back("image of " + tname(k, k + 1) +
                              " does not have order " + std::to_string(p));
    }
  }
  return rep;
}

UtMatrix phi_closed_form(const IndexScheme& ix, const UtMatrix& a) {
  if (a.dim() != ix.n || a.modulus() != ix.p) {
    throw MismatchError("element does not match the index scheme");
  }
  UtMatrix r = UtMatrix::identity(ix.m, ix.p);
  // q copies of the zero-first-row part: one per inserted slot, one on the
  // integer labels
  for (uint32_t k = 2; k < ix.n; ++k) {
    for (uint32_t l = k + 1; l <= ix.n; ++l) {
      uint32_t v = a.at(k, l);
      if (v == 0) continue;
      r.set(ix.pos_int(k), ix.pos_int(l), v);
      for (uint32_t j = 1; j < ix.q; ++j) {
        r.set(ix.pos_gap(k - 1, j), ix.pos_gap(l - 1, j), v);
      }
    }
  }
  // original first row on the integer label columns
  for (uint32_t l = 2; l <= ix.n; ++l) {
    r.set(1, ix.pos_int(l), a.at(1, l));
  }
  return r;
}

UtMatrix psi_closed_form(const IndexScheme& ix, const UtMatrix& a) {
  if (a.dim() != ix.n || a.modulus() != ix.p) {
    throw MismatchError("element does not match the index scheme");
  }
  UtMatrix r = UtMatrix::identity(ix.m, ix.p);
  for (uint32_t k = 1; k + 1 < ix.n; ++k) {
    for (uint32_t l = k + 1; l < ix.n; ++l) {
      uint32_t v = a.at(k, l);
      if (v == 0) continue;
      r.set(ix.pos_int(k), ix.pos_int(l), v);
      for (uint32_t j = 1; j < ix.q; ++j) {
        r.set(ix.pos_gap(k, j), ix.pos_gap(l, j), v);
      }
    }
  }
  // original last column on the integer label rows
  for (uint32_t i = 1; i < ix.n; ++i) {
    r.set(ix.pos_int(i), ix.m, a.at(i, ix.n));
  }
  return r;
}

}  // namespace utroots

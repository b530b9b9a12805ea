#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "utroots/ut_matrix.hpp"
#include "utroots/wreath.hpp"

namespace utroots {

inline constexpr size_t kDefaultSizeBound = 1000000;

// Group operations supplied by the caller; the engine below only ever
// multiplies, inverts, and serializes elements, so it works for any finite
// group representation with a canonical key.
template <typename E>
struct GroupOps {
  std::function<E(const E&, const E&)> mul;
  std::function<E(const E&)> inv;
  std::function<std::string(const E&)> key;
  E identity;
};

// A finite subgroup held element by element, keyed by canonical
// serialization. elements[0] is the identity.
template <typename E>
struct SubgroupSet {
  std::vector<E> elements;
  std::unordered_set<std::string> index;
  std::vector<E> generators;

  size_t size() const { return elements.size(); }
  bool trivial() const { return elements.size() == 1; }
  bool contains(const std::string& k) const { return index.count(k) > 0; }
};

// Breadth-first closure under right multiplication by the generators.
// Throws SizeLimitError beyond size_bound elements.
template <typename E>
SubgroupSet<E> subgroup_closure(const std::vector<E>& generators,
                                const GroupOps<E>& ops,
                                size_t size_bound = kDefaultSizeBound) {
  SubgroupSet<E> s;
  s.generators = generators;
  s.elements.push_back(ops.identity);
  s.index.insert(ops.key(ops.identity));
  for (size_t next = 0; next < s.elements.size(); ++next) {
    for (const E& g : generators) {
      E prod = ops.mul(s.elements[next], g);
      std::string k = ops.key(prod);
      if (s.index.count(k)) continue;
      if (s.elements.size() >= size_bound) {
        throw SizeLimitError("subgroup closure exceeded " +
                             std::to_string(size_bound) + " elements");
      }
      s.index.insert(std::move(k));
      s.elements.push_back(std::move(prod));
    }
  }
  return s;
}

template <typename E>
struct LowerCentralSeries {
  std::vector<SubgroupSet<E>> terms;  // terms[k-1] = gamma_k, last is {e}
  uint32_t nilpotency_class = 0;      // largest k with gamma_k nontrivial
};

// gamma_1 = G, gamma_{k+1} = <[x, g] : x in gamma_k, g generator of G>.
// Commutators of all of gamma_k against a generating set of G generate
// [gamma_k, G] exactly, by induction on the word length of the second
// argument.
template <typename E>
LowerCentralSeries<E> lower_central_series(
    const SubgroupSet<E>& g, const GroupOps<E>& ops,
    size_t size_bound = kDefaultSizeBound) {
  LowerCentralSeries<E> series;
  series.terms.push_back(g);
  while (!series.terms.back().trivial()) {
    const SubgroupSet<E>& cur = series.terms.back();
    std::vector<E> comms;
    std::unordered_set<std::string> seen;
    for (const E& x : cur.elements) {
      for (const E& gen : g.generators) {
        E c = ops.mul(ops.mul(ops.inv(x), ops.inv(gen)), ops.mul(x, gen));
        std::string k = ops.key(c);
        if (seen.insert(std::move(k)).second) comms.push_back(std::move(c));
      }
    }
    series.terms.push_back(subgroup_closure(comms, ops, size_bound));
    if (series.terms.size() > 512) {
      throw SizeLimitError("lower central series does not terminate");
    }
  }
  series.nilpotency_class =
      static_cast<uint32_t>(series.terms.size()) - 1;
  return series;
}

// Smallest p-power order of x, via repeated p-th powers.
template <typename E>
uint64_t p_power_order(const E& x, uint32_t p, const GroupOps<E>& ops) {
  uint64_t order = 1;
  E cur = x;
  std::string id_key = ops.key(ops.identity);
  while (ops.key(cur) != id_key) {
    E next = cur;
    for (uint32_t t = 1; t < p; ++t) next = ops.mul(next, cur);
    cur = std::move(next);
    order *= p;
    if (order > (uint64_t{1} << 40)) {
      throw SizeLimitError("element order is not a small power of p");
    }
  }
  return order;
}

// K_i = product over n*p^j >= i of (p^j)-th powers of gamma_n. Since
// gamma_n^(p^(j+1)) lies inside <gamma_n^(p^j)>, only the smallest valid j
// per n contributes generators. Returns the nontrivial terms K_1 .. K_d.
template <typename E>
std::vector<SubgroupSet<E>> kp_series(const SubgroupSet<E>& g,
                                      const GroupOps<E>& ops, uint32_t p,
                                      size_t size_bound = kDefaultSizeBound) {
  LowerCentralSeries<E> lcs = lower_central_series(g, ops, size_bound);
  // exponent bound: beyond the largest element order, p-th powers are all e
  uint64_t exponent = 1;
  for (const E& x : g.elements) {
    uint64_t o = p_power_order(x, p, ops);
    if (o > exponent) exponent = o;
  }
  std::vector<SubgroupSet<E>> out;
  for (uint32_t i = 1;; ++i) {
    std::vector<E> gens;
    for (uint32_t n = 1; n <= lcs.nilpotency_class; ++n) {
      uint64_t pj = 1;
      while (static_cast<uint64_t>(n) * pj < i) pj *= p;
      if (pj > exponent) continue;  // all such powers are trivial
      for (const E& x : lcs.terms[n - 1].elements) {
        E powed = ops.identity;
        E base = x;
        uint64_t e = pj;
        while (e > 0) {  // square and multiply inside the callable group
          if (e & 1) powed = ops.mul(powed, base);
          base = ops.mul(base, base);
          e >>= 1;
        }
        gens.push_back(std::move(powed));
      }
    }
    SubgroupSet<E> k = subgroup_closure(gens, ops, size_bound);
    if (k.trivial()) break;
    out.push_back(std::move(k));
  }
  return out;
}

// The numbers Shield's formula consumes, for a finite p-group B:
// d is the length of the K-series, p^e(v) = |K_v / K_{v+1}|,
// a = 1 + (p-1) * sum(v * e(v)), b = (p-1) * d.
struct ShieldData {
  uint32_t p = 0;
  uint64_t d = 0;
  std::vector<uint32_t> e;  // e[v-1] = e(v), v = 1..d
  uint64_t a = 0;
  uint64_t b = 0;
};

// Closed form for the cyclic group C_{p^s}: d = p^(s-1), e(v) = 1 exactly
// at the powers v = 1, p, ..., p^(s-1), a = p^s, b = (p-1)p^(s-1).
ShieldData shield_data_cyclic(uint32_t p, uint32_t s);

// Same numbers computed from an explicit K-series (sizes of the terms).
ShieldData shield_data_from_sizes(uint32_t p,
                                  const std::vector<size_t>& kp_sizes);

// log_p of the exponent of the w-th lower central term of UT_n(F_p): the
// term is the subgroup supported on bands >= w, whose largest element order
// is the least p^t >= floor((n-1)/w) + 1.
uint32_t ut_gamma_exponent_log(uint32_t n, uint32_t p, uint32_t w);

// max over w = 1..len(s_log) of a*w + (s_log[w-1] - 1)*b.
uint64_t shield_class(uint64_t a, uint64_t b,
                      const std::vector<uint32_t>& s_log);

// Ready-made operation tables for the two element kinds the CLI exposes.
GroupOps<UtMatrix> matrix_group_ops(uint32_t n, uint32_t p);
GroupOps<WreathElement> wreath_group_ops(uint32_t n, uint32_t p, uint32_t q);

// Adjacent transvections, generating UT_n(F_p).
std::vector<UtMatrix> ut_generators(uint32_t n, uint32_t p);
// Adjacent transvections in coordinate 1 plus the shift: generates the full
// wreath product (the diagonal copy alone would not).
std::vector<WreathElement> wreath_generators(uint32_t n, uint32_t p,
                                             uint32_t q);

// The three routes to the class of UT_n(F_p) wr C_{p^s}: the closed form
// q(n-1), Shield's formula fed with cyclic-group data and the UT exponent
// logs, and (when the group is small enough for the element budget) the
// brute-force lower central series of the explicitly generated group.
struct WreathClassReport {
  uint64_t formula = 0;
  uint64_t shield = 0;
  std::optional<uint64_t> brute;  // empty when skipped
  size_t group_size = 0;          // 0 when brute is skipped
  bool agree = false;             // all computed routes coincide
};

WreathClassReport wreath_class_check(uint32_t n, uint32_t p, uint32_t s,
                                     bool include_brute,
                                     size_t size_bound = kDefaultSizeBound);

}  // namespace utroots

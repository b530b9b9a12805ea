#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "utroots/errors.hpp"
#include "utroots/nilpotency.hpp"
#include "utroots/wreath.hpp"

using namespace utroots;
using utroots::test::all_unitriangular;

namespace {

// The cyclic group C_{p^s}, realized by the shift chain inside UT_{q+1}.
SubgroupSet<UtMatrix> cyclic_group(uint32_t p, uint32_t s) {
  WreathEmbeddingData d = build_wreath_embedding(2, p, s);
  GroupOps<UtMatrix> ops = matrix_group_ops(d.scheme.m, p);
  return subgroup_closure({d.c}, ops);
}

// K-series by the raw definition: for every i, close over x^(p^j) for all
// x in gamma_n and ALL j (not just the minimal one) with n*p^j >= i.
template <typename E>
std::vector<size_t> kp_sizes_by_definition(const SubgroupSet<E>& g,
                                           const GroupOps<E>& ops,
                                           uint32_t p) {
  LowerCentralSeries<E> lcs = lower_central_series(g, ops);
  std::vector<size_t> sizes;
  for (uint32_t i = 1;; ++i) {
    std::vector<E> gens;
    for (uint32_t n = 1; n <= lcs.nilpotency_class; ++n) {
      for (uint64_t pj = 1; pj <= 4096; pj *= p) {
        if (static_cast<uint64_t>(n) * pj < i) continue;
        for (const E& x : lcs.terms[n - 1].elements) {
          E powed = ops.identity;
          for (uint64_t t = 0; t < pj; ++t) powed = ops.mul(powed, x);
          gens.push_back(powed);
        }
      }
    }
    SubgroupSet<E> k = subgroup_closure(gens, ops);
    if (k.trivial()) break;
    sizes.push_back(k.size());
  }
  return sizes;
}

}  // namespace

TEST_SUITE("nilpotency") {

TEST_CASE("subgroup closure") {
  GroupOps<UtMatrix> ops = matrix_group_ops(3, 2);
  SubgroupSet<UtMatrix> trivial = subgroup_closure({}, ops);
  CHECK(trivial.size() == 1);
  CHECK(trivial.trivial());

  SubgroupSet<UtMatrix> full = subgroup_closure(ut_generators(3, 2), ops);
  CHECK(full.size() == 8);
  CHECK(full.contains(UtMatrix::transvection(3, 2, 1, 3, 1).key()));

  SubgroupSet<UtMatrix> cyc = cyclic_group(3, 1);
  CHECK(cyc.size() == 3);

  GroupOps<UtMatrix> big_ops = matrix_group_ops(4, 3);
  CHECK_THROWS_AS(subgroup_closure(ut_generators(4, 3), big_ops, 100),
                  SizeLimitError);
}

TEST_CASE("lower central series of small unitriangular groups") {
  GroupOps<UtMatrix> ops3 = matrix_group_ops(3, 2);
  SubgroupSet<UtMatrix> g3 = subgroup_closure(ut_generators(3, 2), ops3);
  LowerCentralSeries<UtMatrix> lcs3 = lower_central_series(g3, ops3);
  CHECK(lcs3.nilpotency_class == 2);
  REQUIRE(lcs3.terms.size() == 3);
  CHECK(lcs3.terms[1].size() == 2);
  CHECK(lcs3.terms[1].contains(UtMatrix::transvection(3, 2, 1, 3, 1).key()));
  CHECK(lcs3.terms[2].trivial());

  // Band subgroups: |gamma_w(UT_n(F_p))| = p^((n-w)(n-w+1)/2).
  GroupOps<UtMatrix> ops4 = matrix_group_ops(4, 2);
  SubgroupSet<UtMatrix> g4 = subgroup_closure(ut_generators(4, 2), ops4);
  LowerCentralSeries<UtMatrix> lcs4 = lower_central_series(g4, ops4);
  CHECK(lcs4.nilpotency_class == 3);
  CHECK(lcs4.terms[0].size() == 64);
  CHECK(lcs4.terms[1].size() == 8);
  CHECK(lcs4.terms[2].size() == 2);

  LowerCentralSeries<UtMatrix> abelian =
      lower_central_series(cyclic_group(2, 2), matrix_group_ops(5, 2));
  CHECK(abelian.nilpotency_class == 1);
}

TEST_CASE("p-power orders") {
  GroupOps<UtMatrix> ops = matrix_group_ops(5, 2);
  CHECK(p_power_order(UtMatrix::identity(5, 2), 2, ops) == 1);
  UtMatrix chain = UtMatrix::identity(5, 2);
  for (uint32_t i = 1; i < 5; ++i) chain.set(i, i + 1, 1);
  CHECK(p_power_order(chain, 2, ops) == 8);
  GroupOps<UtMatrix> ops3 = matrix_group_ops(3, 3);
  CHECK(p_power_order(UtMatrix::transvection(3, 3, 1, 2, 1), 3, ops3) == 3);
}

TEST_CASE("K-series of cyclic p-groups matches the closed form") {
  for (uint32_t p : {2u, 3u}) {
    for (uint32_t s : {1u, 2u}) {
      CAPTURE(p);
      CAPTURE(s);
      SubgroupSet<UtMatrix> g = cyclic_group(p, s);
      GroupOps<UtMatrix> ops = matrix_group_ops(g.elements[0].dim(), p);
      std::vector<SubgroupSet<UtMatrix>> ks = kp_series(g, ops, p);

      uint32_t d = 1;
      for (uint32_t t = 1; t < s; ++t) d *= p;
      REQUIRE(ks.size() == d);  // K_{p^(s-1)+1} is the first trivial term

      std::vector<size_t> sizes;
      for (const auto& k : ks) sizes.push_back(k.size());
      CHECK(sizes == kp_sizes_by_definition(g, ops, p));

      ShieldData from_sizes = shield_data_from_sizes(p, sizes);
      ShieldData closed = shield_data_cyclic(p, s);
      CHECK(from_sizes.d == closed.d);
      CHECK(from_sizes.e == closed.e);
      CHECK(from_sizes.a == closed.a);
      CHECK(from_sizes.b == closed.b);
    }
  }
}

TEST_CASE("K-series of a nonabelian group against the raw definition") {
  GroupOps<UtMatrix> ops = matrix_group_ops(3, 2);
  SubgroupSet<UtMatrix> g = subgroup_closure(ut_generators(3, 2), ops);
  std::vector<size_t> sizes;
  for (const auto& k : kp_series(g, ops, 2)) sizes.push_back(k.size());
  CHECK(sizes == kp_sizes_by_definition(g, ops, 2));
}

TEST_CASE("cyclic-top data") {
  ShieldData d21 = shield_data_cyclic(2, 1);
  CHECK(d21.d == 1);
  CHECK(d21.e == std::vector<uint32_t>{1});
  CHECK(d21.a == 2);
  CHECK(d21.b == 1);

  ShieldData d32 = shield_data_cyclic(3, 2);
  CHECK(d32.d == 3);
  CHECK(d32.e == std::vector<uint32_t>{1, 0, 1});
  CHECK(d32.a == 9);
  CHECK(d32.b == 6);

  CHECK_THROWS_AS(shield_data_cyclic(4, 1), NonPrimeModulus);
  CHECK_THROWS_AS(shield_data_cyclic(3, 0), MismatchError);
  CHECK_THROWS_AS(shield_data_from_sizes(3, {9, 4}), MismatchError);
  CHECK_THROWS_AS(shield_data_from_sizes(3, {6, 1}), MismatchError);
}

TEST_CASE("exponent logs of the band subgroups") {
  for (uint32_t n : {2u, 3u, 4u, 5u, 6u}) {
    for (uint32_t p : {2u, 3u}) {
      CHECK(ut_gamma_exponent_log(n, p, n - 1) == 1);
    }
  }
  CHECK(ut_gamma_exponent_log(4, 2, 1) == 2);
  CHECK(ut_gamma_exponent_log(3, 3, 1) == 1);
  CHECK_THROWS_AS(ut_gamma_exponent_log(4, 2, 0), MismatchError);
  CHECK_THROWS_AS(ut_gamma_exponent_log(4, 2, 4), MismatchError);

  // Against brute force: p^s(w) is the exponent of gamma_w.
  for (auto [n, p] : std::vector<std::pair<uint32_t, uint32_t>>{
           {3, 2}, {4, 2}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(p);
    GroupOps<UtMatrix> ops = matrix_group_ops(n, p);
    SubgroupSet<UtMatrix> g = subgroup_closure(ut_generators(n, p), ops);
    LowerCentralSeries<UtMatrix> lcs = lower_central_series(g, ops);
    for (uint32_t w = 1; w <= lcs.nilpotency_class; ++w) {
      uint64_t exponent = 1;
      for (const UtMatrix& x : lcs.terms[w - 1].elements) {
        exponent = std::max(exponent, p_power_order(x, p, ops));
      }
      uint64_t expect = 1;
      for (uint32_t t = 0; t < ut_gamma_exponent_log(n, p, w); ++t) {
        expect *= p;
      }
      CHECK(expect == exponent);
    }
  }
}

TEST_CASE("class formula evaluation") {
  // d = 1 collapses the formula to a*w at w = n-1.
  CHECK(shield_class(2, 1, {2, 1}) == 4);
  CHECK(shield_class(2, 1, {1}) == 2);
  CHECK(shield_class(9, 6, {1, 1}) == 18);
}

TEST_CASE("generating sets") {
  GroupOps<UtMatrix> mops = matrix_group_ops(2, 2);
  CHECK(mops.identity.is_identity());
  CHECK(subgroup_closure(ut_generators(2, 2), mops).size() == 2);

  // Base injections plus the shift generate the whole wreath product; the
  // diagonal copy alone would stall at |UT_n| * q elements.
  GroupOps<WreathElement> wops = wreath_group_ops(2, 2, 2);
  SubgroupSet<WreathElement> w =
      subgroup_closure(wreath_generators(2, 2, 2), wops);
  CHECK(w.size() == 8);
  GroupOps<WreathElement> wops4 = wreath_group_ops(2, 2, 4);
  CHECK(subgroup_closure(wreath_generators(2, 2, 4), wops4).size() == 64);
}

TEST_CASE("three routes to the wreath product class") {
  WreathClassReport r221 = wreath_class_check(2, 2, 1, true);
  CHECK(r221.formula == 2);
  CHECK(r221.shield == 2);
  REQUIRE(r221.brute.has_value());
  CHECK(*r221.brute == 2);
  CHECK(r221.group_size == 8);
  CHECK(r221.agree);

  WreathClassReport r321 = wreath_class_check(3, 2, 1, true);
  CHECK(r321.formula == 4);
  CHECK(r321.shield == 4);
  CHECK(*r321.brute == 4);
  CHECK(r321.group_size == 128);
  CHECK(r321.agree);

  WreathClassReport r231 = wreath_class_check(2, 3, 1, true);
  CHECK(r231.formula == 3);
  CHECK(r231.shield == 3);
  CHECK(*r231.brute == 3);
  CHECK(r231.group_size == 81);
  CHECK(r231.agree);

  WreathClassReport skipped = wreath_class_check(4, 5, 2, false);
  CHECK(skipped.formula == 75);
  CHECK(skipped.shield == 75);
  CHECK_FALSE(skipped.brute.has_value());
  CHECK(skipped.group_size == 0);
  CHECK(skipped.agree);
}

}  // TEST_SUITE

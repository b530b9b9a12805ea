#include <random>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "utroots/errors.hpp"
#include "utroots/fp_matrix.hpp"
#include "utroots/ut_matrix.hpp"

using namespace utroots;
using utroots::test::all_unitriangular;
using utroots::test::mat_from_rows;
using utroots::test::naive_matmul_mod;
using utroots::test::naive_order;

TEST_SUITE("ut_matrix") {

TEST_CASE("construction and entry access") {
  UtMatrix e = UtMatrix::identity(4, 5);
  CHECK(e.dim() == 4);
  CHECK(e.modulus() == 5);
  CHECK(e.is_identity());
  for (uint32_t i = 1; i <= 4; ++i) {
    for (uint32_t j = 1; j <= 4; ++j) CHECK(e.at(i, j) == (i == j ? 1 : 0));
  }

  UtMatrix t = UtMatrix::transvection(4, 5, 2, 4, -1);
  CHECK(t.at(2, 4) == 4);
  CHECK_FALSE(t.is_identity());

  CHECK_THROWS_AS(UtMatrix::identity(3, 6), NonPrimeModulus);
  CHECK_THROWS_AS(UtMatrix::identity(0, 5), MismatchError);
  CHECK_THROWS_AS(UtMatrix::transvection(3, 5, 2, 2, 1), MismatchError);
  CHECK_THROWS_AS(UtMatrix::transvection(3, 5, 3, 1, 1), MismatchError);
  CHECK_THROWS_AS(e.at(0, 1), MismatchError);
  CHECK_THROWS_AS(e.at(1, 5), MismatchError);

  UtMatrix a = UtMatrix::identity(3, 5);
  a.set(1, 3, -2);
  CHECK(a.at(1, 3) == 3);
  CHECK_THROWS_AS(a.set(2, 2, 1), MismatchError);
  CHECK_THROWS_AS(a.set(3, 1, 1), MismatchError);
}

TEST_CASE("product matches the naive kernel") {
  std::mt19937_64 rng(777);
  for (uint32_t p : {2u, 3u, 7u}) {
    for (int trial = 0; trial < 25; ++trial) {
      UtMatrix a = random_unitriangular(6, p, rng);
      UtMatrix b = random_unitriangular(6, p, rng);
      std::vector<uint32_t> av(a.data(), a.data() + 36);
      std::vector<uint32_t> bv(b.data(), b.data() + 36);
      auto cv = naive_matmul_mod(av, bv, 6, 6, 6, p);
      UtMatrix c = a * b;
      CHECK(std::vector<uint32_t>(c.data(), c.data() + 36) == cv);
    }
  }
  CHECK_THROWS_AS(UtMatrix::identity(3, 5) * UtMatrix::identity(4, 5),
                  MismatchError);
  CHECK_THROWS_AS(UtMatrix::identity(3, 5) * UtMatrix::identity(3, 7),
                  MismatchError);
}

TEST_CASE("inverse, exhaustive on UT_3(F_3) and random beyond") {
  for (const UtMatrix& a : all_unitriangular(3, 3)) {
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
  std::mt19937_64 rng(778);
  for (int trial = 0; trial < 10; ++trial) {
    UtMatrix a = random_unitriangular(9, 7, rng);
    CHECK((a * a.inverse()).is_identity());
  }
}

TEST_CASE("pow") {
  std::mt19937_64 rng(779);
  UtMatrix a = random_unitriangular(5, 3, rng);
  UtMatrix acc = UtMatrix::identity(5, 3);
  for (int64_t e = 0; e <= 10; ++e) {
    CHECK(a.pow(e) == acc);
    acc = acc * a;
  }
  CHECK(a.pow(-4) == a.inverse().pow(4));
  // Transvections have order p.
  UtMatrix t = UtMatrix::transvection(4, 7, 1, 3, 2);
  CHECK(t.pow(7).is_identity());
  CHECK_FALSE(t.pow(6).is_identity());
}

TEST_CASE("transvection relations") {
  // [t_{i,j}, t_{j,k}] = t_{i,k}; disjoint pairs commute.
  for (uint32_t p : {2u, 3u, 5u}) {
    UtMatrix t12 = UtMatrix::transvection(4, p, 1, 2, 1);
    UtMatrix t23 = UtMatrix::transvection(4, p, 2, 3, 1);
    UtMatrix t34 = UtMatrix::transvection(4, p, 3, 4, 1);
    UtMatrix t13 = UtMatrix::transvection(4, p, 1, 3, 1);
    CHECK(commutator(t12, t23) == t13);
    CHECK(commutator(t12, t34).is_identity());
    CHECK(commutator(t13, t34) == UtMatrix::transvection(4, p, 1, 4, 1));
  }
  UtMatrix x = UtMatrix::transvection(3, 5, 1, 2, 2);
  UtMatrix y = UtMatrix::transvection(3, 5, 2, 3, 3);
  CHECK(conjugate(x, y) == y.inverse() * x * y);
  CHECK(commutator(x, y) == x.inverse() * y.inverse() * x * y);
}

TEST_CASE("element_order matches the naive count") {
  for (const UtMatrix& a : all_unitriangular(3, 3)) {
    CHECK(element_order(a) == naive_order(a));
  }
  std::mt19937_64 rng(780);
  for (int trial = 0; trial < 5; ++trial) {
    UtMatrix a = random_unitriangular(4, 5, rng);
    CHECK(element_order(a) == naive_order(a));
  }
  // The full superdiagonal chain in UT_5(F_2) needs three squarings.
  UtMatrix chain = UtMatrix::identity(5, 2);
  for (uint32_t i = 1; i < 5; ++i) chain.set(i, i + 1, 1);
  CHECK(element_order(chain) == 8);
}

TEST_CASE("transvection factorization roundtrip") {
  CHECK(transvection_factors(UtMatrix::identity(4, 3)).empty());
  auto roundtrip = [](const UtMatrix& a) {
    UtMatrix prod = UtMatrix::identity(a.dim(), a.modulus());
    for (const Transvection& f : transvection_factors(a)) {
      prod = prod * UtMatrix::transvection(a.dim(), a.modulus(), f.i, f.j,
                                           f.gamma);
    }
    return prod == a;
  };
  for (const UtMatrix& a : all_unitriangular(3, 3)) CHECK(roundtrip(a));
  for (const UtMatrix& a : all_unitriangular(4, 2)) CHECK(roundtrip(a));
  std::mt19937_64 rng(781);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(roundtrip(random_unitriangular(7, 5, rng)));
  }
  // Factors never repeat a position and carry nonzero coefficients.
  UtMatrix a = random_unitriangular(6, 3, rng);
  std::set<std::pair<uint32_t, uint32_t>> seen;
  for (const Transvection& f : transvection_factors(a)) {
    CHECK(f.gamma != 0);
    CHECK(seen.insert({f.i, f.j}).second);
  }
}

TEST_CASE("first-row and last-column splits") {
  auto check_splits = [](const UtMatrix& a) {
    auto [f, rest] = split_first_row(a);
    CHECK(f * rest == a);
    for (uint32_t i = 2; i <= a.dim(); ++i) {
      for (uint32_t j = i + 1; j <= a.dim(); ++j) CHECK(f.at(i, j) == 0);
    }
    for (uint32_t j = 2; j <= a.dim(); ++j) CHECK(rest.at(1, j) == 0);

    auto [g, rest2] = split_last_column(a);
    CHECK(g * rest2 == a);
    for (uint32_t i = 1; i + 1 < a.dim(); ++i) {
      for (uint32_t j = i + 1; j < a.dim(); ++j) CHECK(g.at(i, j) == 0);
    }
    for (uint32_t i = 1; i < a.dim(); ++i) CHECK(rest2.at(i, a.dim()) == 0);
  };
  for (const UtMatrix& a : all_unitriangular(3, 3)) check_splits(a);
  std::mt19937_64 rng(782);
  for (int trial = 0; trial < 50; ++trial) {
    check_splits(random_unitriangular(6, 5, rng));
  }
}

TEST_CASE("keys separate elements") {
  std::set<std::string> keys;
  for (const UtMatrix& a : all_unitriangular(3, 3)) keys.insert(a.key());
  CHECK(keys.size() == 27);
  // Two-byte entry encoding kicks in above one byte.
  UtMatrix a = UtMatrix::transvection(2, 257, 1, 2, 256);
  UtMatrix b = UtMatrix::transvection(2, 257, 1, 2, 1);
  CHECK(a.key() != b.key());
}

TEST_CASE("format and parse roundtrip") {
  std::mt19937_64 rng(783);
  for (uint32_t p : {2u, 257u}) {
    for (int trial = 0; trial < 10; ++trial) {
      UtMatrix a = random_unitriangular(5, p, rng);
      CHECK(read_matrix(format_matrix(a)) == a);
    }
  }
  UtMatrix t = UtMatrix::transvection(2, 2, 1, 2, 1);
  CHECK(format_matrix(t) == "2 2\n1 1\n0 1\n");
}

TEST_CASE("parse diagnostics name the offending entry") {
  CHECK_THROWS_WITH_AS(read_matrix("4 2\n1 0\n0 1\n"),
                       "modulus 4 is not prime", ParseError);
  CHECK_THROWS_WITH_AS(read_matrix("5 2\n1 7\n0 1\n"),
                       "entry (1,2) out of range for modulus 5", ParseError);
  CHECK_THROWS_WITH_AS(
      read_matrix("5 2\n1 1\n0 3\n"),
      "not unitriangular: diagonal entry (2,2) must be 1", ParseError);
  CHECK_THROWS_WITH_AS(
      read_matrix("5 3\n1 0 0\n0 1 0\n0 2 1\n"),
      "not unitriangular: entry (3,2) below the diagonal must be 0",
      ParseError);
  CHECK_THROWS_WITH_AS(read_matrix("5 2\n1 1\n0\n"), "missing entry (2,2)",
                       ParseError);
  CHECK_THROWS_AS(read_matrix(""), ParseError);
  CHECK_THROWS_AS(read_matrix("5 9999\n"), ParseError);
}

TEST_CASE("random elements are deterministic per seed") {
  std::mt19937_64 r1(42), r2(42), r3(43);
  UtMatrix a = random_unitriangular(6, 5, r1);
  UtMatrix b = random_unitriangular(6, 5, r2);
  UtMatrix c = random_unitriangular(6, 5, r3);
  CHECK(a == b);
  CHECK(a != c);  // overwhelmingly likely; fixed seeds make it stable
}

TEST_CASE("rectangular field matrices") {
  FpMatrix v(1, 3, 5);
  v.set(1, 1, 1);
  v.set(1, 2, -1);
  v.set(1, 3, 1);
  CHECK(v.at(1, 2) == 4);
  FpMatrix a = FpMatrix::identity(3, 5);
  CHECK(v * a == v);
  CHECK_THROWS_AS(a * v, MismatchError);
  CHECK((v + v).at(1, 2) == 3);
  CHECK_FALSE(v.is_zero());
  CHECK(FpMatrix(2, 2, 5).is_zero());
  UtMatrix u = UtMatrix::transvection(3, 5, 1, 3, 2);
  FpMatrix fu(u);
  CHECK(fu.at(1, 3) == 2);
  CHECK(fu.at(2, 2) == 1);
  CHECK(fu.pow(0) == FpMatrix::identity(3, 5));
  CHECK(fu.pow(5) == FpMatrix(u.pow(5)));
}

}  // TEST_SUITE

#include <random>

#include "doctest.h"
#include "linalg.hpp"
#include "gen.hpp"

using namespace whcx;

TEST_CASE("scalar arithmetic is exact") {
  Scalar a = Scalar::parse("2/4", 0);
  CHECK(a.value().get_num() == 1);
  CHECK(a.value().get_den() == 2);
  Scalar b = Scalar::parse("-3/6", 0);
  CHECK((a + b).is_zero());
  CHECK(((a + Scalar(7)) - Scalar(7)) == a);
  CHECK_THROWS_AS(a / Scalar(0), std::domain_error);
  Scalar x(3, 5);
  CHECK((x * x).value() == 4);
  CHECK((Scalar(1, 5) / x).value() == 2);
  CHECK(Scalar::parse("1/2", 7).value() == 4);
  CHECK_THROWS(Scalar(1, 5) + Scalar(1, 7));
  CHECK_THROWS_AS(Scalar::parse("1/5", 5), std::domain_error);
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(2, 0)) == 2);
  CHECK(rank(Matrix(3, 4, 0)) == 0);
  Matrix m(2, 2, 0);
  m(0, 0) = Scalar(1);
  m(0, 1) = Scalar(2);
  m(1, 0) = Scalar(2);
  m(1, 1) = Scalar(4);
  CHECK(rank(m) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(Matrix::identity(3, 0)).empty());
  auto z = kernel_basis(Matrix(3, 3, 0));
  REQUIRE(z.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(z[i] == unit_vec(3, i, 0));
  Matrix m(1, 2, 2);
  m(0, 0) = Scalar(1, 2);
  m(0, 1) = Scalar(1, 2);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{Scalar(1, 2), Scalar(1, 2)});
  // brute-force oracle: the kernel over F_2 is exactly {0, (1,1)}
  int count = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if ((a + b) % 2 == 0) ++count;
  CHECK(count == 2);
}

TEST_CASE("solve examples") {
  Matrix rhs(2, 1, 0);
  rhs(0, 0) = Scalar(3);
  rhs(1, 0) = Scalar(-1);
  auto x = solve_linear(Matrix::identity(2, 0), rhs);
  REQUIRE(x);
  CHECK(*x == rhs);
  Matrix one(1, 1, 0);
  one(0, 0) = Scalar(1);
  CHECK_FALSE(solve_linear(Matrix(1, 1, 0), one));
  Matrix two(1, 1, 0);
  two(0, 0) = Scalar(2);
  auto h = solve_linear(two, one);
  REQUIRE(h);
  CHECK((*h)(0, 0) == Scalar::parse("1/2", 0));
}

TEST_CASE("quotient examples") {
  auto q = make_quotient(2, {Vec{Scalar(1), Scalar(-1)}}, 0);
  CHECK(q.quotient_dim == 1);
  auto f = make_quotient(3, {}, 0);
  CHECK(f.quotient_dim == 3);
  CHECK(f.projection() == Matrix::identity(3, 0));
  std::vector<Vec> rels = {Vec{Scalar(1), Scalar(1), Scalar(0), Scalar(0)},
                           Vec{Scalar(0), Scalar(1), Scalar(1), Scalar(0)},
                           Vec{Scalar(1), Scalar(2), Scalar(1), Scalar(0)},
                           Vec{Scalar(0), Scalar(0), Scalar(1), Scalar(1)}};
  CHECK(make_quotient(4, rels, 0).quotient_dim == 1);
}

TEST_CASE("property: rank-nullity and quotient invariants on random matrices") {
  std::mt19937 rng(12345);
  for (int p : {0, 2, 3, 7}) {
    for (int trial = 0; trial < 60; ++trial) {
      int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
      Matrix m = gen::random_matrix(rng, r, c, p);
      CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == c);
      for (const auto& k : kernel_basis(m)) CHECK(is_zero(m.apply(k)));
      std::vector<Vec> rows;
      for (int i = 0; i < r; ++i) rows.push_back(m.row(i));
      auto q = make_quotient(c, rows, p);
      CHECK(q.projection() * q.section() == Matrix::identity(q.quotient_dim, p));
      for (const auto& rel : rows) CHECK(is_zero(q.projection().apply(rel)));
      CHECK(q.quotient_dim == c - rank(m));
      // solve consistency: m x = m y always has a solution
      Matrix y = gen::random_matrix(rng, c, 1, p);
      auto x = solve_linear(m, m * y);
      REQUIRE(x);
      CHECK(m * *x == m * y);
    }
  }
}

TEST_CASE("property: field identities") {
  std::mt19937 rng(777);
  for (int p : {0, 5, 11}) {
    for (int trial = 0; trial < 200; ++trial) {
      Scalar x = gen::random_scalar(rng, p), y = gen::random_scalar(rng, p);
      CHECK(((x + y) - y) == x);
      CHECK(x * (y + Scalar(1, p)) == x * y + x);
      if (!y.is_zero()) CHECK((x / y) * y == x);
      if (p == 0) CHECK(x.value().get_den() > 0);
    }
  }
}

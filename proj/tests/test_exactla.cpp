#include <doctest.h>

#include <random>

#include "crg/exactla.hpp"
#include "crg/algmod.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace crg;

namespace {

Mat random_mat(Field f, std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(-3, 3);
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

std::size_t oracle_rank(const Mat& m) {
  if (m.field().is_finite()) return oracle::rank_mod(oracle::ints(m), m.field().characteristic());
  std::vector<std::vector<Rational>> t(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[i][j] = m(i, j).value();
  return oracle::rank_q(t);
}

}  // namespace

TEST_CASE("scalar arithmetic mod p") {
  Field f = Field::prime(7);
  CHECK(f.from_int(-1).residue() == 6);
  CHECK((f.from_int(3) * f.from_int(5)).residue() == 1);
  CHECK((f.from_int(3).inverse() * f.from_int(3)).is_one());
  CHECK(f.from_rational(Rational(1, 2)).residue() == 4);
  CHECK_THROWS_AS(f.from_rational(Rational(1, 7)), std::invalid_argument);
  CHECK_THROWS(Field::prime(4));
  CHECK(f.name() == "F7");
}

TEST_CASE("rational scalars print in lowest terms") {
  Field q = Field::rationals();
  CHECK(q.from_rational(Rational(-4, 6)).str() == "-2/3");
  CHECK(q.from_int(5).str() == "5/1");
  CHECK((q.from_rational(Rational(1, 3)) + q.from_rational(Rational(2, 3))).is_one());
}

TEST_CASE("kernel examples") {
  Field f2 = Field::prime(2), f3 = Field::prime(3);
  CHECK(kernel(Mat::identity(f2, 2)).rows() == 0);
  Mat k0 = kernel(Mat(f3, 2, 3));
  CHECK(k0 == Mat::identity(f3, 3));
  Mat k = kernel(Mat::from_ints(f2, {{1, 1}, {1, 1}}));
  CHECK(k == Mat::from_ints(f2, {{1, 1}}));
}

TEST_CASE("solve examples") {
  Field f2 = Field::prime(2);
  Vec t{f2.one(), f2.zero(), f2.one()};
  CHECK(solve(Mat::identity(f2, 3), t) == t);
  CHECK(!solve(Mat(f2, 3, 3), t));
  auto x = solve(Mat::from_ints(f2, {{1, 1}}), Vec{f2.one()});
  REQUIRE(x);
  CHECK(*x == Vec{f2.one(), f2.zero()});
}

TEST_CASE("quotient examples") {
  Field f2 = Field::prime(2);
  QuotientSpace q0 = quotient(f2, 3, Mat(f2, 0, 3));
  CHECK(q0.quo_dim == 3);
  CHECK(q0.projection == Mat::identity(f2, 3));
  CHECK(quotient(f2, 2, Mat::identity(f2, 2)).quo_dim == 0);
  QuotientSpace q = quotient(f2, 2, Mat::from_ints(f2, {{1, 1}}));
  CHECK(q.quo_dim == 1);
  CHECK(q.projection.col(0) == q.projection.col(1));
  CHECK(!q.projection.is_zero());
}

TEST_CASE("descends examples") {
  Field f2 = Field::prime(2);
  Mat m = Mat::from_ints(f2, {{1, 0, 1}, {0, 1, 1}});
  QuotientSpace triv = quotient(f2, 3, Mat(f2, 0, 3));
  CHECK(descends(m, triv) == m);
  QuotientSpace q = quotient(f2, 2, Mat::from_ints(f2, {{1, 0}}));
  CHECK(!descends(Mat::from_ints(f2, {{1, 0}}), q));

  // multiplication of D2 over the k-balancing relations (there are none)
  Algebra d2 = diagonal_algebra(f2);
  TensorChain aa = tensor_over(restrict_right(regular_bimodule(d2), unit_map(d2)),
                               restrict_left(regular_bimodule(d2), unit_map(d2)));
  CHECK(aa.dim() == 4);
  auto mu = descends(d2.mult(), aa.quotient());
  REQUIRE(mu);
  CHECK(*mu * aa.proj() == d2.mult());
}

TEST_CASE("matrix helpers") {
  Field f3 = Field::prime(3);
  Mat a = Mat::from_ints(f3, {{1, 2}, {0, 1}});
  Mat b = Mat::from_ints(f3, {{0, 1}, {1, 0}});
  Mat k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == f3.one());
  CHECK(k(1, 2) == f3.from_int(2));
  CHECK(kron(a, b) * kron(b, a) == kron(a * b, b * a));
  CHECK(reshape(f3, flatten(a), 2, 2) == a);
  CHECK(lex_less(b, a) == true);
  CHECK(!lex_less(a, a));
}

TEST_CASE("rank-nullity and quotient identities on random matrices") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> dim(0, 6);
  for (Field f : {Field::prime(2), Field::prime(3), Field::prime(7), Field::rationals()}) {
    CAPTURE(f.name());
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = dim(rng), c = dim(rng);
      Mat m = random_mat(f, rng, r, c);
      const std::size_t rk = rank(m);
      CHECK(rk == oracle_rank(m));
      Mat k = kernel(m);
      CHECK(rk + k.rows() == c);
      CHECK(rank(k) == k.rows());
      if (k.rows()) CHECK((m * k.transpose()).is_zero());

      QuotientSpace q = quotient(f, c, m);
      CHECK(q.quo_dim == c - rk);
      CHECK(q.projection * q.section == Mat::identity(f, q.quo_dim));
      if (r) CHECK((q.projection * m.transpose()).is_zero());

      // solve finds a preimage exactly when one exists
      Vec x = random_mat(f, rng, c, 1).col(0);
      Vec y = m.apply(x);
      auto s = solve(m, y);
      REQUIRE(s);
      CHECK(m.apply(*s) == y);
    }
  }
}

TEST_CASE("quotients depend only on the row space of the relations") {
  std::mt19937 rng(7);
  Field f = Field::prime(5);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_mat(f, rng, 3, 5);
    Mat g = random_mat(f, rng, 3, 3);
    while (rank(g) < 3) g = random_mat(f, rng, 3, 3);
    QuotientSpace a = quotient(f, 5, m), b = quotient(f, 5, g * m);
    CHECK(a.projection == b.projection);
    CHECK(a.section == b.section);
  }
}

TEST_CASE("hom_space matches brute force") {
  Field f = Field::prime(2);
  Algebra t2 = upper_triangular_algebra(f);
  // endomorphisms of T2 commuting with every left multiplication
  std::vector<Mat> src, dst;
  for (std::size_t i = 0; i < 3; ++i) {
    src.push_back(t2.left_mult(i));
    dst.push_back(t2.left_mult(i));
  }
  auto basis = hom_space(f, 3, 3, src, dst);
  std::size_t count = 0;
  oracle::each_matrix(2, 3, 3, [&](const oracle::Table& g) {
    for (std::size_t i = 0; i < 3; ++i) {
      oracle::Table l = oracle::ints(t2.left_mult(i));
      for (std::size_t x = 0; x < 3; ++x) {
        auto e = oracle::basis_vec(3, x);
        if (oracle::apply(g, oracle::apply(l, e, 2), 2) != oracle::apply(l, oracle::apply(g, e, 2), 2)) return;
      }
    }
    ++count;
  });
  CHECK(count == (std::size_t{1} << basis.size()));
}

TEST_CASE("size guard") {
  Limits saved = limits();
  set_limits(Limits{16, saved.max_enum});
  CHECK_THROWS_AS(check_dim(17, "test"), SizeLimit);
  set_limits(saved);
}

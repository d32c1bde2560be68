#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace crg;
using fx::I;

namespace {

Bimodule over_k(Field f, std::size_t n) {
  Algebra k = ground_algebra(f);
  return Bimodule::from_actions(k, k, n, {I(f, n)}, {I(f, n)});
}

Mat swap(Field f, std::size_t m, std::size_t n) {
  Mat s(f, m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) s(tensor_k(m, j, i), tensor_k(n, i, j)) = f.one();
  return s;
}

}  // namespace

TEST_CASE("row-major tensor index") {
  for (std::size_t i = 0; i < 4; ++i) CHECK(tensor_k(1, i, 0) == i);
  CHECK(tensor_k(2, 1, 0) == 2);
  CHECK(tensor_k(2, 2, 1) == 5);
}

TEST_CASE("tensor over the field is the full k-tensor product") {
  Field f = fx::F3();
  TensorChain t = tensor_over(over_k(f, 2), over_k(f, 3));
  CHECK(t.dim() == 6);
  CHECK(t.proj() == I(f, 6));
}

TEST_CASE("A over A") {
  Field f = fx::F2();
  Algebra d2 = diagonal_algebra(f);
  TensorChain aa = tensor_over(regular_bimodule(d2), regular_bimodule(d2));
  CHECK(aa.ambient_dim() == 4);
  CHECK(aa.dim() == 2);
  Mat mu = *descends(d2.mult(), aa.quotient());
  CHECK(rank(mu) == 2);  // the multiplication is an isomorphism A (x)_A A -> A

  Bimodule m = forget_left(regular_bimodule(d2));
  CHECK(tensor_over(m, regular_bimodule(d2)).dim() == m.dim());
}

TEST_CASE("multiplication descends through A (x)_A A") {
  for (Field f : {fx::F2(), fx::F3(), Field::rationals()})
    for (const Algebra& a : fx::algebras(f)) {
      TensorChain aa = tensor_over(regular_bimodule(a), regular_bimodule(a));
      auto mu = descends(a.mult(), aa.quotient());
      REQUIRE(mu);
      CHECK(*mu * aa.proj() == a.mult());
      CHECK(aa.dim() == a.dim());
    }
}

TEST_CASE("dimension equals ambient minus rank of the balancing relations") {
  for (Field f : {fx::F2(), fx::F3()})
    for (const Algebra& a : fx::algebras(f)) {
      std::vector<Bimodule> rights{regular_bimodule(a), forget_left(regular_bimodule(a))};
      std::vector<Bimodule> lefts{regular_bimodule(a), restrict_right(regular_bimodule(a), unit_map(a))};
      for (const auto& m : rights)
        for (const auto& n : lefts) {
          TensorChain t = tensor_over(m, n);
          Mat rel = balancing_relations(m, n);
          CHECK(t.dim() == m.dim() * n.dim() - oracle::rank_mod(oracle::ints(rel), f.characteristic()));
          CHECK(t.proj() * t.sect() == I(f, t.dim()));
          if (rel.rows()) CHECK((t.proj() * rel.transpose()).is_zero());
        }
    }
}

TEST_CASE("induced maps") {
  Field f = fx::F2();
  Algebra d2 = diagonal_algebra(f);
  TensorChain aa = tensor_over(regular_bimodule(d2), regular_bimodule(d2));
  CHECK(induced_map(I(f, 4), aa, aa) == I(f, 2));

  // swapping the factors of Sigma (x)_D2 D2 into D2 (x)_k Sigma does not respect the balancing
  Bimodule sigma = fx::sigma_d2(f);
  Bimodule n = restrict_right(regular_bimodule(d2), unit_map(d2));
  TensorChain src = tensor_over(sigma, n);
  TensorChain dst = tensor_over(n, sigma);
  REQUIRE(dst.dim() == 4);
  CHECK(!induced_map(swap(f, 2, 2), src, dst));
}

TEST_CASE("induced_map exists iff relations are preserved, and then commutes with projection") {
  for (Field f : {fx::F2(), fx::F3()}) {
    Algebra t2 = upper_triangular_algebra(f);
    TensorChain tt = tensor_over(regular_bimodule(t2), regular_bimodule(t2));
    std::vector<Mat> candidates;
    for (std::size_t x = 0; x < 3; ++x) {
      candidates.push_back(kron(t2.left_mult(x), I(f, 3)));
      candidates.push_back(kron(I(f, 3), t2.right_mult(x)));
      candidates.push_back(kron(I(f, 3), t2.left_mult(x)));
      candidates.push_back(kron(t2.right_mult(x), I(f, 3)));
    }
    candidates.push_back(swap(f, 3, 3));
    for (const Mat& g : candidates) {
      auto h = induced_map(g, tt, tt);
      const bool preserves = (tt.proj() * g * tt.quotient().relations.transpose()).is_zero();
      CHECK(bool(h) == preserves);
      if (h) CHECK(tt.proj() * g == *h * tt.proj());
    }
  }
}

TEST_CASE("associativity normalizer") {
  Field f = fx::F2();
  AssocNormalizer kk = assoc_normalizer(over_k(f, 2), over_k(f, 1), over_k(f, 2));
  CHECK(kk.flat.dim() == 4);
  CHECK(kk.from_left == I(f, 4));
  CHECK(kk.from_right == I(f, 4));

  Bimodule a = regular_bimodule(diagonal_algebra(f));
  AssocNormalizer n = assoc_normalizer(a, a, a);
  CHECK(n.flat.ambient_dim() == 8);
  CHECK(n.flat.dim() == 2);
  CHECK(n.left_nested.dim() == 2);
  CHECK(n.right_nested.dim() == 2);
  CHECK(rank(n.from_left) == 2);
  CHECK(rank(n.from_right) == 2);

  Bimodule t = regular_bimodule(upper_triangular_algebra(f));
  AssocNormalizer nt = assoc_normalizer(t, t, t);
  CHECK(nt.flat.dim() == 3);
  CHECK(rank(nt.from_left) == 3);
  CHECK(rank(nt.from_right) == 3);
}

TEST_CASE("outer bimodule and direct sums") {
  Field f = fx::F3();
  Algebra t2 = upper_triangular_algebra(f);
  Bimodule m = tensor_bimodule(regular_bimodule(t2), regular_bimodule(t2));
  CHECK(check_bimodule(m));
  CHECK(m.dim() == 3);
  Bimodule s = direct_sum(regular_bimodule(t2), m);
  CHECK(s.dim() == 6);
  CHECK(check_bimodule(s));
}

#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace crg;
using fx::I;

namespace {

// k^n with orthogonal idempotents.
Algebra split_algebra(Field f, std::size_t n) {
  Mat mult(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i) mult(i, i * n + i) = f.one();
  Vec unit(n, f.one());
  return make_algebra(f, n, mult, unit);
}

void check_iso(const AlgebraMap& m) {
  CHECK(check_algebra_map(m));
  CHECK(m.source.dim() == m.target.dim());
  CHECK(rank(m.matrix) == m.source.dim());
  if (m.source.field().is_finite()) {
    const auto p = m.source.field().characteristic();
    CHECK(oracle::is_algebra_map(oracle::ints(m.matrix), oracle::alg(m.source), oracle::alg(m.target)));
    CHECK(oracle::rank_mod(oracle::ints(m.matrix), p) == m.source.dim());
  }
}

}  // namespace

TEST_CASE("trivial corings") {
  Field f = fx::F2();
  CHECK(trivial_coring(ground_algebra(f)).dim() == 1);
  CHECK(trivial_coring(diagonal_algebra(f)).dim() == 2);
  Coring m2 = trivial_coring(matrix_algebra(f, 2));
  CHECK(m2.dim() == 4);
  CHECK(check_coring(m2));
}

TEST_CASE("Sweedler corings") {
  Field f = fx::F2();
  CHECK(sweedler_coring(unit_map(diagonal_algebra(f))) == sweedler_fixture(f));
  Coring c2 = sweedler_coring(unit_map(cyclic_group_algebra(f, 2)));
  CHECK(c2.dim() == 4);
  CHECK(check_coring(c2));
}

TEST_CASE("Sweedler coring of the identity is the trivial coring via multiplication") {
  for (Field f : {fx::F2(), fx::F3(), Field::rationals()})
    for (const Algebra& a : fx::algebras(f)) {
      Coring s = sweedler_coring(identity_map(a));
      Coring t = trivial_coring(a);
      REQUIRE(s.dim() == a.dim());
      auto mu = descends(a.mult(), sweedler_chain(identity_map(a)).quotient());
      REQUIRE(mu);
      CHECK(check_coring_morphism(*mu, s, t));
      CHECK(rank(*mu) == a.dim());
    }
}

TEST_CASE("comatrix coring of Sigma = A over k is the Sweedler coring") {
  for (Field f : {fx::F2(), fx::F3()})
    for (const Algebra& a : {diagonal_algebra(f), upper_triangular_algebra(f)}) {
      Bimodule sigma = forget_left(regular_bimodule(a));
      DualBasis db{{a.unit()}, {I(f, a.dim())}};
      Coring cm = comatrix_coring(sigma, db);
      Coring sw = sweedler_coring(unit_map(a));
      REQUIRE(cm.dim() == sw.dim());
      // f (x) s -> f(1) (x) s
      RightDual dual = right_dual(sigma);
      Mat at_one(f, a.dim(), dual.basis.size());
      for (std::size_t i = 0; i < dual.basis.size(); ++i) at_one.set_col(i, (dual.basis[i] * a.unit_col()).col(0));
      TensorChain src = comatrix_chain(sigma, dual);
      Mat gamma = sweedler_chain(unit_map(a)).proj() * kron(at_one, I(f, a.dim())) * src.sect();
      CHECK(check_coring_morphism(gamma, cm, sw));
      CHECK(rank(gamma) == sw.dim());
    }
}

TEST_CASE("comatrix coring of D2 with the coordinate dual basis") {
  Field f = fx::F2();
  Bimodule sigma = fx::sigma_d2(f);
  CHECK(check_dual_basis(sigma, fx::coordinate_dual_basis(f)));
  Coring c = comatrix_coring(sigma, fx::coordinate_dual_basis(f));
  CHECK(c.dim() == 4);
  CHECK(find_isomorphism(dual_ring(c).alg, opposite(left_linear_endomorphisms(sigma).alg)));

  DualBasis broken = fx::coordinate_dual_basis(f);
  broken.functionals[1] = Mat(f, 2, 2);
  try {
    comatrix_coring(sigma, broken);
    FAIL("broken dual basis accepted");
  } catch (const DualBasisInvalid& e) {
    CHECK(e.axiom() == "dual-basis");
    CHECK(e.witness() == Witness{1});
  }
}

TEST_CASE("flip entwining") {
  Field f = fx::F2();
  Algebra d2 = diagonal_algebra(f);
  Coalgebra gc = group_coalgebra(f, 2);
  Coring c = entwining_coring(Entwining{d2, gc, flip(f, 2, 2)});
  CHECK(c.dim() == 4);
  CHECK(check_coring(c));

  CHECK_THROWS_AS(entwining_coring(Entwining{d2, gc, Mat(f, 4, 4)}), AxiomViolation);

  // over the ground field the entwining coring is the coalgebra itself
  Algebra k = ground_algebra(f);
  CHECK(entwining_coring(Entwining{k, gc, flip(f, 2, 1)}) == coalgebra_as_coring(gc));
}

TEST_CASE("twisted convolution") {
  Field f3 = fx::F3();
  Entwining e{ground_algebra(f3), group_coalgebra(f3, 2), flip(f3, 2, 1)};
  Algebra conv = twisted_convolution(e);
  CHECK(conv.dim() == 2);
  // matrix units are the point evaluations: pointwise product
  CHECK(conv == diagonal_algebra(f3));

  for (Field f : {fx::F2(), fx::F3()}) {
    Entwining flip_d2{diagonal_algebra(f), group_coalgebra(f, 2), flip(f, 2, 2)};
    DualRing dual = dual_ring(entwining_coring(flip_d2));
    check_iso(twisted_to_dual(flip_d2, dual));
  }

  Entwining trivial_c{upper_triangular_algebra(f3), group_coalgebra(f3, 1), flip(f3, 1, 3)};
  CHECK(find_isomorphism(twisted_convolution(trivial_c), upper_triangular_algebra(f3)));
}

TEST_CASE("twisted product agrees with the defining sum for the flip") {
  Field f = fx::F3();
  Entwining e{cyclic_group_algebra(f, 2), group_coalgebra(f, 2), flip(f, 2, 2)};
  Algebra a = e.alg;
  // for group-likes and the flip, (f # g)(c) = f(c) g(c) in A
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Mat x = reshape(f, unit_vec(f, 4, i), 2, 2), y = reshape(f, unit_vec(f, 4, j), 2, 2);
      Mat xy = twisted_product(e, x, y);
      for (std::size_t c = 0; c < 2; ++c) CHECK(xy.col(c) == a.product(x.col(c), y.col(c)));
    }
}

TEST_CASE("group coalgebras") {
  Field f = fx::F2();
  Coalgebra g1 = group_coalgebra(f, 1);
  CHECK(g1.dim == 1);
  CHECK(coalgebra_as_coring(g1) == trivial_coring(ground_algebra(f)));
  CHECK(check_coalgebra(group_coalgebra(f, 2)));
  Coalgebra g3 = group_coalgebra(f, 3);
  CHECK(check_coalgebra(g3));
  CHECK(find_isomorphism(dual_ring(coalgebra_as_coring(g3)).alg, split_algebra(f, 3)));
}

TEST_CASE("coalgebra axioms are checked") {
  Field f = fx::F2();
  Coalgebra g = group_coalgebra(f, 2);
  g.eps = Mat(f, 1, 2);
  CHECK(!check_coalgebra(g));
  CHECK_THROWS_AS(make_coalgebra(f, 2, g.delta, g.eps), AxiomViolation);
}

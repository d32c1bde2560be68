#pragma once

// Named coring constructions and the small fixtures used throughout.

#include <cstddef>
#include <vector>

#include "crg/coring.hpp"

namespace crg {

/// k-coalgebra: delta C -> C (x)_k C, eps C -> k (a 1 x dim matrix).
struct Coalgebra {
  Field field;
  std::size_t dim = 0;
  Mat delta;
  Mat eps;
};

Verdict check_coalgebra(const Coalgebra& c);
Coalgebra make_coalgebra(Field f, std::size_t dim, const Mat& delta, const Mat& eps);
/// n group-like basis elements: delta(g) = g (x) g, eps(g) = 1.
Coalgebra group_coalgebra(Field f, std::size_t n);
/// A coalgebra seen as a coring over the ground field.
Coring coalgebra_as_coring(const Coalgebra& c);

/// A with delta(a) = 1 (x) a and eps = id.
Coring trivial_coring(const Algebra& a);

/// A (x)_B A for iota: B -> A, B acting through iota.
TensorChain sweedler_chain(const AlgebraMap& iota);
/// delta(a (x) a') = a (x) 1 (x) a', eps(a (x) a') = aa'.
Coring sweedler_coring(const AlgebraMap& iota);

/// Hom_A(Sigma, A) for a (B,A)-bimodule Sigma, as an (A,B)-bimodule:
/// (a.f)(s) = a f(s), (f.b)(s) = f(bs).
struct RightDual {
  Bimodule bimodule;
  std::vector<Mat> basis;  // dim(A) x dim(Sigma) each
};
RightDual right_dual(const Bimodule& sigma);

/// Elements e_i of Sigma and right A-linear functionals e*_i with
/// sum_i e_i e*_i(s) = s.
struct DualBasis {
  std::vector<Vec> elements;
  std::vector<Mat> functionals;
};
/// Checks that every functional is right A-linear ("functional", witness i)
/// and the reconstruction identity ("dual-basis", witness s).
Verdict check_dual_basis(const Bimodule& sigma, const DualBasis& db);
/// Sigma* (x)_B Sigma with delta(f (x) s) = sum_i f (x) e_i (x) e*_i (x) s and
/// eps(f (x) s) = f(s). Throws DualBasisInvalid.
Coring comatrix_coring(const Bimodule& sigma, const DualBasis& db);
/// The chain Sigma* (x)_B Sigma underlying comatrix_coring.
TensorChain comatrix_chain(const Bimodule& sigma, const RightDual& dual);

/// psi: C (x) A -> A (x) C.
struct Entwining {
  Algebra alg;
  Coalgebra coalg;
  Mat psi;
};
/// c (x) a -> a (x) c.
Mat flip(Field f, std::size_t dim_c, std::size_t dim_a);
/// A (x) C (basis index a*dim(C) + c) with a(a' (x) c)a'' = aa' psi(c (x) a''),
/// delta(a (x) c) = a (x) delta(c), eps(a (x) c) = a eps(c).
Coring entwining_coring(const Entwining& e);

/// Hom_k(C, A) with (f # g)(c) = sum f(c_(2))_alpha g(c_(1)^alpha); the basis is
/// the matrix units of dim(A) x dim(C) matrices in row-major order.
Mat twisted_product(const Entwining& e, const Mat& f, const Mat& g);
Algebra twisted_convolution(const Entwining& e);
/// f -> (a (x) c -> a f(c)) into the dual ring of entwining_coring(e),
/// checked to be a bijective algebra map.
AlgebraMap twisted_to_dual(const Entwining& e, const DualRing& dual);

// Fixtures.

/// k x k with orthogonal idempotents e1, e2.
Algebra diagonal_algebra(Field f);
/// k[C_n], basis g^0 .. g^(n-1).
Algebra cyclic_group_algebra(Field f, std::size_t n);
/// n x n matrices, basis E_ij at index i*n + j.
Algebra matrix_algebra(Field f, std::size_t n);
/// Upper triangular 2 x 2 matrices, basis E11, E12, E22.
Algebra upper_triangular_algebra(Field f);
/// Sweedler coring of the unit map k -> k x k.
Coring sweedler_fixture(Field f);

}  // namespace crg

#pragma once

// Finite-dimensional algebras, algebra maps and bimodules given by structure
// constants. Every constructor checks its axioms exhaustively on basis tuples.

#include <cstddef>
#include <optional>
#include <vector>

#include "crg/exactla.hpp"

namespace crg {

/// Associative unital k-algebra. The product is stored as the linear map
/// A (x) A -> A, column i*dim + j holding the coordinates of e_i e_j.
class Algebra {
 public:
  Algebra() = default;

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Mat& mult() const { return mult_; }
  const Vec& unit() const { return unit_; }

  /// Matrix of x -> e_i x.
  const Mat& left_mult(std::size_t i) const { return left_[i]; }
  /// Matrix of x -> x e_i.
  const Mat& right_mult(std::size_t i) const { return right_[i]; }
  /// Matrix of x -> a x / x -> a x for an arbitrary element a.
  Mat left_mult_by(const Vec& a) const;
  Mat right_mult_by(const Vec& a) const;

  Vec product(const Vec& x, const Vec& y) const;
  Mat unit_col() const { return Mat::column(field_, unit_); }

  /// Structure constants m[i][j][l] with e_i e_j = sum_l m[i][j][l] e_l.
  Scalar constant(std::size_t i, std::size_t j, std::size_t l) const { return mult_(l, i * dim_ + j); }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.mult_ == b.mult_ && a.unit_ == b.unit_;
  }

  /// Unchecked construction; use make_algebra for validated input.
  static Algebra raw(Field f, std::size_t dim, Mat mult, Vec unit);

 private:
  Field field_;
  std::size_t dim_ = 0;
  Mat mult_;
  Vec unit_;
  std::vector<Mat> left_;
  std::vector<Mat> right_;
};

Verdict check_algebra(const Algebra& a);

/// Validated algebra from a product matrix (dim x dim^2) and a unit vector.
/// Throws AxiomViolation{associativity | unitality}.
Algebra make_algebra(Field f, std::size_t dim, const Mat& mult, const Vec& unit);

/// Build the product matrix from a 3-tensor t[i][j][l].
Mat mult_from_tensor(Field f, std::size_t dim, const std::vector<std::vector<Vec>>& t);

/// The base field as a one-dimensional algebra.
Algebra ground_algebra(Field f);
Algebra opposite(const Algebra& a);

struct AlgebraMap {
  Algebra source;
  Algebra target;
  Mat matrix;  // target.dim x source.dim
};

Verdict check_algebra_map(const AlgebraMap& f);
AlgebraMap make_algebra_map(const Algebra& source, const Algebra& target, const Mat& matrix);
AlgebraMap identity_map(const Algebra& a);
/// The unit map k -> A.
AlgebraMap unit_map(const Algebra& a);
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

/// All algebra maps b -> a over a prime field, in lexicographic order of the
/// row-major matrix entries. Throws NonFiniteField or SizeLimit.
std::vector<AlgebraMap> enumerate_algebra_maps(const Algebra& b, const Algebra& a);

/// Some isomorphism a -> b found by exhaustive search over a prime field.
std::optional<AlgebraMap> find_isomorphism(const Algebra& a, const Algebra& b);

/// (L, R)-bimodule. lact: L (x) M -> M (column a*dim + m), ract: M (x) R -> M
/// (column m*dim(R) + a). One-sided modules use the ground algebra on the
/// other side.
class Bimodule {
 public:
  Bimodule() = default;

  Field field() const { return left_alg_.field(); }
  const Algebra& left_alg() const { return left_alg_; }
  const Algebra& right_alg() const { return right_alg_; }
  std::size_t dim() const { return dim_; }
  const Mat& lact() const { return lact_; }
  const Mat& ract() const { return ract_; }

  /// Matrix of m -> e_a m.
  const Mat& left_action(std::size_t a) const { return lmats_[a]; }
  /// Matrix of m -> m e_a.
  const Mat& right_action(std::size_t a) const { return rmats_[a]; }
  const std::vector<Mat>& left_actions() const { return lmats_; }
  const std::vector<Mat>& right_actions() const { return rmats_; }

  friend bool operator==(const Bimodule& x, const Bimodule& y) {
    return x.dim_ == y.dim_ && x.left_alg_ == y.left_alg_ && x.right_alg_ == y.right_alg_ && x.lact_ == y.lact_ &&
           x.ract_ == y.ract_;
  }

  static Bimodule raw(const Algebra& l, const Algebra& r, std::size_t dim, Mat lact, Mat ract);
  /// Same as raw, from per-basis-element action matrices.
  static Bimodule from_actions(const Algebra& l, const Algebra& r, std::size_t dim, const std::vector<Mat>& lmats,
                               const std::vector<Mat>& rmats);

 private:
  Algebra left_alg_;
  Algebra right_alg_;
  std::size_t dim_ = 0;
  Mat lact_;
  Mat ract_;
  std::vector<Mat> lmats_;
  std::vector<Mat> rmats_;
};

/// Checks, in order: unital, commuting-actions, left-assoc, right-assoc.
Verdict check_bimodule(const Bimodule& m);
Bimodule make_bimodule(const Algebra& l, const Algebra& r, std::size_t dim, const Mat& lact, const Mat& ract);

/// A over itself by left and right multiplication.
Bimodule regular_bimodule(const Algebra& a);
/// Right A-module with the ground field acting on the left.
Bimodule right_module(const Algebra& a, std::size_t dim, const std::vector<Mat>& rmats);
/// Left A-module with the ground field acting on the right.
Bimodule left_module(const Algebra& a, std::size_t dim, const std::vector<Mat>& lmats);
/// Forget the left structure (replace it by the ground field).
Bimodule forget_left(const Bimodule& m);
/// Restrict the right action along an algebra map into right_alg.
Bimodule restrict_right(const Bimodule& m, const AlgebraMap& f);
/// Restrict the left action along an algebra map into left_alg.
Bimodule restrict_left(const Bimodule& m, const AlgebraMap& f);
/// Matrix of m -> x.m for an arbitrary element x of the left algebra.
Mat left_action_by(const Bimodule& m, const Vec& x);
Mat right_action_by(const Bimodule& m, const Vec& x);

/// The algebra of left-linear endomorphisms of m (product f g = f o g) and
/// the matrix of each basis element.
struct EndomorphismAlgebra {
  Algebra alg;
  std::vector<Mat> basis;
};
EndomorphismAlgebra left_linear_endomorphisms(const Bimodule& m);

/// Coordinates of `v` in a basis of matrices whose flattenings are in
/// reduced echelon form (as produced by hom_space); nullopt if outside.
std::optional<Vec> coords_in(const std::vector<Mat>& basis, const Mat& v);

}  // namespace crg

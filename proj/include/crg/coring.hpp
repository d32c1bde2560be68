#pragma once

// Corings, comodules and the left dual ring.
//
// Coproducts and coactions are stored as lifts into the k-tensor ambient
// space. Validated objects hold the canonical lift section(projection(x)),
// so two structures are equal exactly when their stored matrices are.

#include <cstddef>
#include <optional>
#include <vector>

#include "crg/tensorcat.hpp"

namespace crg {

/// A-coring: (A,A)-bimodule C, coproduct lifted to C (x)_k C, counit C -> A.
class Coring {
 public:
  Coring() = default;

  const Algebra& base() const { return c_.left_alg(); }
  const Bimodule& bimodule() const { return c_; }
  Field field() const { return c_.field(); }
  std::size_t dim() const { return c_.dim(); }
  const Mat& delta_lift() const { return delta_lift_; }
  const Mat& eps() const { return eps_; }
  /// C (x)_A C.
  const TensorChain& cc() const { return cc_; }
  /// The coproduct in coordinates of cc().
  Mat delta() const { return cc_.proj() * delta_lift_; }

  friend bool operator==(const Coring& x, const Coring& y) {
    return x.c_ == y.c_ && x.delta_lift_ == y.delta_lift_ && x.eps_ == y.eps_;
  }

  static Coring raw(const Bimodule& c, const Mat& delta_lift, const Mat& eps);

 private:
  Bimodule c_;
  Mat delta_lift_;
  Mat eps_;
  TensorChain cc_;
};

/// Checks bimodule axioms, then bilinearity, coassoc, counit-left, counit-right.
Verdict check_coring(const Coring& c);
Coring make_coring(const Bimodule& c, const Mat& delta_lift, const Mat& eps);

/// Right comodule. The module may carry a left action by another algebra
/// (used when C itself is a comodule over a second coring); only the right
/// action enters the comodule axioms.
class Comodule {
 public:
  Comodule() = default;

  const Coring& coring() const { return c_; }
  const Bimodule& module() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  const Mat& rho_lift() const { return rho_lift_; }
  /// M (x)_A C.
  const TensorChain& mc() const { return mc_; }
  Mat rho() const { return mc_.proj() * rho_lift_; }

  static Comodule raw(const Coring& c, const Bimodule& m, const Mat& rho_lift);

 private:
  Coring c_;
  Bimodule m_;
  Mat rho_lift_;
  TensorChain mc_;
};

/// Checks A-linearity, coassoc, counit.
Verdict check_comodule(const Comodule& m);
Comodule make_comodule(const Coring& c, const Bimodule& m, const Mat& rho_lift);

/// C with coaction given by the coproduct.
Comodule regular_comodule(const Coring& c);
/// Diagonal coaction on M + N. The left structures are dropped unless both
/// modules carry the same left algebra.
Comodule direct_sum(const Comodule& m, const Comodule& n);
/// N (x)_A M with coaction N (x)_A rho^M; for M regular this is the cofree
/// comodule on N.
Comodule tensor_left(const Bimodule& n, const Comodule& m);

/// Left comodule: lambda lifted to C (x)_k N.
class LeftComodule {
 public:
  LeftComodule() = default;

  const Coring& coring() const { return c_; }
  const Bimodule& module() const { return n_; }
  std::size_t dim() const { return n_.dim(); }
  const Mat& lambda_lift() const { return lambda_lift_; }
  const TensorChain& cn() const { return cn_; }

  static LeftComodule raw(const Coring& c, const Bimodule& n, const Mat& lambda_lift);

 private:
  Coring c_;
  Bimodule n_;
  Mat lambda_lift_;
  TensorChain cn_;
};

/// Checks left-A-linearity, left-coassoc, left-counit.
Verdict check_left_comodule(const LeftComodule& n);
LeftComodule regular_left_comodule(const Coring& c);

/// Right A-linear and rho^N f = (f (x)_A C) rho^M. Witness: basis index of M.
Verdict check_colinear(const Mat& f, const Comodule& m, const Comodule& n);

/// M as (A,B)-bimodule with a left C-coaction and a right D-coaction. Checks
/// both one-sided structures, that each coaction is linear for the other
/// side, and that (lambda (x)_B D) sigma = (C (x)_A sigma) lambda. The last
/// identity is checked both directly and as D-colinearity of lambda; the two
/// answers must agree.
Verdict check_bicomodule(const Coring& c, const Coring& d, const Bimodule& m, const Mat& lambda_lift,
                         const Mat& sigma_lift);

/// M []_C N: basis (rows, in coordinates of M (x)_A N) of the kernel of
/// rho^M (x) N - M (x) lambda^N.
struct Cotensor {
  TensorChain mn;
  Mat basis;
  std::size_t dim() const { return basis.rows(); }
};
Cotensor cotensor(const Comodule& m, const LeftComodule& n);

/// Left A-linear maps C -> A with the product (f*g)(c) = g(c_(1) f(c_(2))).
struct DualRing {
  Algebra alg;
  std::vector<Mat> basis;  // dim(A) x dim(C) each
};
DualRing dual_ring(const Coring& c);
Mat dual_product(const Coring& c, const Mat& f, const Mat& g);
/// Coordinates of a left A-linear map in the dual ring basis.
std::optional<Vec> dual_coords(const DualRing& r, const Mat& f);

/// gamma: C -> D between corings over the same algebra. Checks, in order,
/// bimodule-map, counit, coproduct.
Verdict check_coring_morphism(const Mat& gamma, const Coring& c, const Coring& d);

}  // namespace crg

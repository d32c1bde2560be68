#pragma once

// Measurings, coring extensions, the induced comodule functor and
// composition of extensions.

#include <vector>

#include "crg/coring.hpp"

namespace crg {

/// nu: C (x)_k B -> A, a dim(A) x dim(C)*dim(B) matrix.
struct Measuring {
  Coring c;
  Algebra b;
  Mat nu;
};

/// Checks, in order: A-linearity (witness a, column), unit (witness c),
/// multiplicativity (witness b, b', c).
Verdict check_measuring(const Measuring& m);

/// All measurings of b to the base of c, by sweeping the space of left
/// A-linear maps. Sorted lexicographically on nu. Prime fields only.
std::vector<Measuring> enumerate_measurings(const Coring& c, const Algebra& b);

/// chi(b) = nu(- (x) b) in the basis of the dual ring.
AlgebraMap measuring_to_algebra_map(const Measuring& m, const DualRing& dual);
Measuring algebra_map_to_measuring(const Coring& c, const DualRing& dual, const AlgebraMap& chi);

/// c (x) b -> c_(1) nu(c_(2) (x) b), a dim(C) x dim(C)*dim(B) matrix.
Mat action_from_measuring(const Measuring& m);
/// nu = eps o ract. Throws AxiomViolation when ract does not make C an
/// (A,B)-bimodule with right B-linear coproduct.
Measuring measuring_from_action(const Coring& c, const Algebra& b, const Mat& ract);

/// C as (A,B)-bimodule with the given right action.
Bimodule extension_bimodule(const Coring& c, const Algebra& b, const Mat& ract);
/// Bimodule axioms, then delta-B-linearity (witness b, c).
Verdict check_extension_action(const Coring& c, const Algebra& b, const Mat& ract);

/// D over B is a right extension of C over A via a right B-action on C and
/// a D-coaction sigma (lifted to C (x)_k D).
struct CoringExtension {
  Coring c;
  Coring d;
  Mat ract;        // dim(C) x dim(C)*dim(B)
  Mat sigma_lift;  // dim(C)*dim(D) x dim(C)

  const Algebra& a() const { return c.base(); }
  const Algebra& b() const { return d.base(); }
  Bimodule bimodule() const { return extension_bimodule(c, d.base(), ract); }
  /// C as a right D-comodule.
  Comodule as_comodule() const;

  friend bool operator==(const CoringExtension&, const CoringExtension&) = default;
};

Verdict check_coring_extension(const CoringExtension& e);
/// Validates and stores the canonical lift of sigma.
CoringExtension make_coring_extension(const Coring& c, const Coring& d, const Mat& ract, const Mat& sigma_lift);

/// ract = right A-action, sigma = coproduct.
CoringExtension identity_extension(const Coring& c);
/// sigma = (C (x)_A gamma) delta. Throws NotCoringMorphism.
CoringExtension extension_from_coring_map(const Mat& gamma, const Coring& c, const Coring& d);
/// The trivial B-coring with sigma(c) = c (x) 1, for a right B-action on C.
CoringExtension extension_to_trivial(const Coring& c, const Algebra& b, const Mat& ract);

/// m (x) b -> m_(0) nu(m_(1) (x) b) with nu = eps o ract.
Mat induced_action(const CoringExtension& e, const Comodule& m);
/// M with the induced right B-action (left structure kept).
Bimodule induced_module(const CoringExtension& e, const Comodule& m);
/// The D-comodule on M: the unique coaction rho with
/// (rho^M (x)_B D) rho = (M (x)_A sigma) rho^M. Throws PurityFailure when
/// M (x)_B D does not embed into M (x)_A C (x)_B D.
Comodule induced_coaction(const CoringExtension& e, const Comodule& m);
/// f re-verified as a map of D-comodules; throws NotColinear when f is not
/// C-colinear to begin with.
Mat apply_functor(const CoringExtension& e, const Mat& f, const Comodule& m, const Comodule& n);

/// e1: (C:A) -> (D:B), e2: (D:B) -> (E:R). Throws MiddleMismatch.
CoringExtension compose_extensions(const CoringExtension& e1, const CoringExtension& e2);

}  // namespace crg

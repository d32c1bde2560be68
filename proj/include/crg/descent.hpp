#pragma once

// Descent data for an algebra map B -> A, their identification with
// comodules over the Sweedler coring A (x)_B A, and the transport of descent
// data along a tower D -> B -> A.

#include "crg/extension.hpp"

namespace crg {

/// (M, f) with M a right A-module and f: M -> M (x)_B A lifted to M (x)_k A.
struct DescentDatum {
  AlgebraMap iota;
  Bimodule m;  // right A-module; the left algebra is not used
  Mat f_lift;  // dim(M)*dim(A) x dim(M)

  /// M (x)_B A.
  TensorChain mba() const;
  friend bool operator==(const DescentDatum& x, const DescentDatum& y) {
    return x.m == y.m && x.f_lift == y.f_lift && x.iota.matrix == y.iota.matrix &&
           x.iota.source == y.iota.source && x.iota.target == y.iota.target;
  }
};

/// Checks A-linearity, unit (multiplication after f is the identity) and
/// cocycle.
Verdict check_descent_datum(const DescentDatum& d);
/// Validates and stores the canonical lift of f.
DescentDatum make_descent_datum(const AlgebraMap& iota, const Bimodule& m, const Mat& f_lift);

/// A-linear g: M -> N with f_N g = (g (x)_B A) f_M.
Verdict check_descent_morphism(const Mat& g, const DescentDatum& m, const DescentDatum& n);

/// m -> m_(0) (x) (1 (x) a) where f(m) = m_(0) (x) a.
Comodule descent_to_comodule(const DescentDatum& d);
/// f(m) = m_(0) x (x) y where rho(m) = m_(0) (x) (x (x) y). The comodule must
/// be over sweedler_coring(iota).
DescentDatum comodule_to_descent(const Comodule& m, const AlgebraMap& iota);

/// Data of a right B-multiplication on A and a (B,B)-bimodule map
/// phi: A -> A (x)_B A (x)_D B for a tower D -> B -> A.
struct Cor28Data {
  AlgebraMap iota_b;  // D -> B
  AlgebraMap iota_a;  // B -> A
  Mat rho_a;          // A (x)_k B -> A
  Mat phi;            // A -> A (x)_k A (x)_k B, a lift
};

/// Checks the B-multiplication (axioms of the (B,B)-bimodule A: unital,
/// commuting-actions, left-assoc, right-assoc), phi-bimodule-map, then the
/// three diagrams diagram-a, diagram-b, diagram-c.
Verdict check_cor28(const Cor28Data& data);

/// The coring extension of A (x)_B A by B (x)_D B assembled from the data:
/// (a' (x) a) b = a' (x) rho_a(a (x) b), sigma(a' (x) a) = a' phi(a). Not
/// validated; throws if rho_a does not descend to A (x)_B A.
CoringExtension assemble_cor28(const Cor28Data& data);

/// Desc(A|B) -> Desc(B|D) through the assembled extension. The data must
/// pass check_cor28.
DescentDatum descent_functor(const Cor28Data& data, const DescentDatum& d);

}  // namespace crg

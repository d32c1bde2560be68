#include "crg/descent.hpp"

#include "crg/constructions.hpp"

namespace crg {

namespace {

Mat id(Field f, std::size_t n) { return Mat::identity(f, n); }

Verdict same(const char* axiom, const Mat& x, const Mat& y, Witness prefix = {}) {
  if (auto c = first_diff_col(x, y)) {
    prefix.push_back(*c);
    return Verdict::fail(axiom, prefix);
  }
  return Verdict::pass();
}

Bimodule a_over_b_left(const AlgebraMap& iota) { return restrict_left(regular_bimodule(iota.target), iota); }

// A as (B,B)-bimodule: left through iota_a, right through rho_a.
Bimodule a_bb(const Cor28Data& d) {
  return Bimodule::raw(d.iota_a.source, d.iota_a.source, d.iota_a.target.dim(), a_over_b_left(d.iota_a).lact(),
                       d.rho_a);
}

}  // namespace

// ---------------------------------------------------------------- descent data

TensorChain DescentDatum::mba() const { return tensor_over(restrict_right(m, iota), a_over_b_left(iota)); }

Verdict check_descent_datum(const DescentDatum& d) {
  const Algebra& a = d.iota.target;
  const Field f = a.field();
  const std::size_t n = d.m.dim();
  if (!(d.m.right_alg() == a)) throw DimensionMismatch("descent datum: module is not over the target algebra");
  if (d.f_lift.rows() != n * a.dim() || d.f_lift.cols() != n)
    throw DimensionMismatch("descent datum: f must be dim(M)*dim(A) x dim(M)");
  TensorChain mba = d.mba();
  const Mat& P = mba.proj();
  for (std::size_t x = 0; x < a.dim(); ++x)
    if (auto v = same("A-linearity", P * d.f_lift * d.m.right_action(x),
                      P * kron(id(f, n), a.right_mult(x)) * d.f_lift, {x});
        !v)
      return v;
  auto mult = descends(d.m.ract(), mba.quotient());
  if (!mult) throw Error("descent datum: the A-action of M does not factor through M (x)_B A");
  if (auto v = same("unit", *mult * P * d.f_lift, id(f, n)); !v) return v;
  Bimodule bb = restrict_right(a_over_b_left(d.iota), d.iota);
  TensorChain mbaa({restrict_right(d.m, d.iota), bb, a_over_b_left(d.iota)}, {true, true});
  return same("cocycle", mbaa.proj() * kron(d.f_lift, id(f, a.dim())) * d.f_lift,
              mbaa.proj() * kron(kron(id(f, n), a.unit_col()), id(f, a.dim())) * d.f_lift);
}

DescentDatum make_descent_datum(const AlgebraMap& iota, const Bimodule& m, const Mat& f_lift) {
  DescentDatum d{iota, m, f_lift};
  require(check_descent_datum(d), "descent datum");
  TensorChain mba = d.mba();
  d.f_lift = mba.sect() * mba.proj() * f_lift;
  return d;
}

Verdict check_descent_morphism(const Mat& g, const DescentDatum& m, const DescentDatum& n) {
  const Algebra& a = m.iota.target;
  if (g.rows() != n.m.dim() || g.cols() != m.m.dim()) throw DimensionMismatch("descent morphism: wrong shape");
  for (std::size_t x = 0; x < a.dim(); ++x)
    if (auto v = same("A-linearity", g * m.m.right_action(x), n.m.right_action(x) * g, {x}); !v) return v;
  TensorChain nba = n.mba();
  const Mat& P = nba.proj();
  return same("compatibility", P * n.f_lift * g, P * kron(g, id(a.field(), a.dim())) * m.f_lift);
}

Comodule descent_to_comodule(const DescentDatum& d) {
  const Algebra& a = d.iota.target;
  const Field f = a.field();
  Coring c = sweedler_coring(d.iota);
  TensorChain ch = sweedler_chain(d.iota);
  Mat one_tensor = ch.proj() * kron(a.unit_col(), id(f, a.dim()));
  return make_comodule(c, d.m, kron(id(f, d.m.dim()), one_tensor) * d.f_lift);
}

DescentDatum comodule_to_descent(const Comodule& m, const AlgebraMap& iota) {
  const Algebra& a = iota.target;
  const Field f = a.field();
  if (!(m.coring() == sweedler_coring(iota)))
    throw DimensionMismatch("comodule_to_descent: comodule is not over the Sweedler coring of this map");
  TensorChain ch = sweedler_chain(iota);
  Mat f_lift = kron(m.module().ract(), id(f, a.dim())) * kron(id(f, m.dim()), ch.sect()) * m.rho_lift();
  return make_descent_datum(iota, m.module(), f_lift);
}

// ---------------------------------------------------------------- towers D -> B -> A

Verdict check_cor28(const Cor28Data& d) {
  const Algebra& a = d.iota_a.target;
  const Algebra& b = d.iota_a.source;
  const Field f = a.field();
  const std::size_t da = a.dim(), db = b.dim();
  if (!(d.iota_b.target == b)) throw DimensionMismatch("cor28: the two algebra maps do not compose");
  if (d.rho_a.rows() != da || d.rho_a.cols() != da * db) throw DimensionMismatch("cor28: rho_a has wrong shape");
  if (d.phi.rows() != da * da * db || d.phi.cols() != da) throw DimensionMismatch("cor28: phi has wrong shape");
  require(check_algebra_map(d.iota_a), "algebra map");
  require(check_algebra_map(d.iota_b), "algebra map");

  Bimodule abb = a_bb(d);
  if (auto v = check_bimodule(abb); !v) return v;

  Bimodule reg = regular_bimodule(a);
  Bimodule f1 = restrict_right(reg, d.iota_a);  // (A,B)
  Bimodule f2 = restrict_right(abb, d.iota_b);  // (B,D)
  Bimodule breg = regular_bimodule(b);
  Bimodule bdb = restrict_left(breg, d.iota_b);  // (D,B)
  Bimodule bdd = restrict_right(bdb, d.iota_b);  // (D,D)
  TensorChain aab = tensor_chain({f1, f2, bdb});

  for (std::size_t y = 0; y < db; ++y) {
    Mat ly = a.left_mult_by(d.iota_a.matrix.col(y));
    if (auto v = same("phi-bimodule-map", aab.proj() * d.phi * abb.left_action(y),
                      aab.proj() * kron(ly, id(f, da * db)) * d.phi, {y});
        !v)
      return v;
    if (auto v = same("phi-bimodule-map", aab.proj() * d.phi * abb.right_action(y),
                      aab.proj() * kron(id(f, da * da), b.right_mult(y)) * d.phi, {y});
        !v)
      return v;
  }

  TensorChain aa = sweedler_chain(d.iota_a);
  if (auto v = same("diagram-a", aa.proj() * kron(id(f, da), d.rho_a) * d.phi,
                    aa.proj() * kron(a.unit_col(), id(f, da)));
      !v)
    return v;

  TensorChain aabb = tensor_chain({f1, f2, bdd, bdb});
  Mat top_b = kron(a.mult(), id(f, da * db * db)) * kron(kron(id(f, da), d.phi), id(f, db)) * d.phi;
  Mat bottom_b = kron(kron(id(f, da * da), b.unit_col()), id(f, db)) * d.phi;
  if (auto v = same("diagram-b", aabb.proj() * top_b, aabb.proj() * bottom_b); !v) return v;

  Bimodule abb_iota = restrict_right(a_over_b_left(d.iota_a), d.iota_a);  // (B,B) through iota_a
  TensorChain aaab = tensor_chain({f1, abb_iota, f2, bdb});
  Mat top_c = kron(a.unit_col(), d.phi);
  Mat bottom_c = kron(kron(id(f, da), a.unit_col()), id(f, da * db)) * d.phi;
  return same("diagram-c", aaab.proj() * top_c, aaab.proj() * bottom_c);
}

CoringExtension assemble_cor28(const Cor28Data& d) {
  const Algebra& a = d.iota_a.target;
  const Algebra& b = d.iota_a.source;
  const Field f = a.field();
  const std::size_t da = a.dim(), db = b.dim();
  Coring c = sweedler_coring(d.iota_a);
  Coring dd = sweedler_coring(d.iota_b);
  TensorChain chc = sweedler_chain(d.iota_a), chd = sweedler_chain(d.iota_b);

  Mat act = chc.proj() * kron(id(f, da), d.rho_a) * kron(chc.sect(), id(f, db));
  // rho_a must be left B-linear for the action to be well defined on A (x)_B A.
  Mat rel_image = chc.proj() * kron(id(f, da), d.rho_a) * kron(chc.quotient().relations.transpose(), id(f, db));
  if (!rel_image.is_zero()) throw Error("cor28: rho_a does not induce an action on A (x)_B A");

  Mat to_d = chd.proj() * kron(b.unit_col(), id(f, db));  // b -> 1 (x) b
  Mat sigma = kron(chc.proj(), to_d) * kron(a.mult(), id(f, da * db)) * kron(id(f, da), d.phi) * chc.sect();
  return CoringExtension{c, dd, act, sigma};
}

DescentDatum descent_functor(const Cor28Data& data, const DescentDatum& d) {
  require(check_cor28(data), "cor28 data");
  CoringExtension raw = assemble_cor28(data);
  CoringExtension e = make_coring_extension(raw.c, raw.d, raw.ract, raw.sigma_lift);
  Comodule m = descent_to_comodule(d);
  return comodule_to_descent(induced_coaction(e, m), data.iota_b);
}

}  // namespace crg

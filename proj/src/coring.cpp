#include "crg/coring.hpp"

namespace crg {

namespace {

Mat id(Field f, std::size_t n) { return Mat::identity(f, n); }

// Fails with witness prefix + first differing column.
Verdict same(const char* axiom, const Mat& x, const Mat& y, Witness prefix = {}) {
  if (auto c = first_diff_col(x, y)) {
    prefix.push_back(*c);
    return Verdict::fail(axiom, prefix);
  }
  return Verdict::pass();
}

void expect_shape(const Mat& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                            ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

}  // namespace

// ---------------------------------------------------------------- Coring

Coring Coring::raw(const Bimodule& c, const Mat& delta_lift, const Mat& eps) {
  if (!(c.left_alg() == c.right_alg())) throw DimensionMismatch("coring: left and right algebras differ");
  expect_shape(delta_lift, c.dim() * c.dim(), c.dim(), "coring coproduct");
  expect_shape(eps, c.left_alg().dim(), c.dim(), "coring counit");
  Coring r;
  r.c_ = c;
  r.delta_lift_ = delta_lift;
  r.eps_ = eps;
  r.cc_ = tensor_over(c, c);
  return r;
}

Verdict check_coring(const Coring& c) {
  const Bimodule& m = c.bimodule();
  const Algebra& a = c.base();
  const Field f = c.field();
  const std::size_t n = c.dim();
  if (auto v = check_bimodule(m); !v) return v;
  const Mat& P = c.cc().proj();
  const Mat& dl = c.delta_lift();
  for (std::size_t x = 0; x < a.dim(); ++x) {
    if (auto v = same("bilinearity", P * dl * m.left_action(x), P * kron(m.left_action(x), id(f, n)) * dl, {x}); !v)
      return v;
    if (auto v = same("bilinearity", P * dl * m.right_action(x), P * kron(id(f, n), m.right_action(x)) * dl, {x}); !v)
      return v;
    if (auto v = same("bilinearity", c.eps() * m.left_action(x), a.left_mult(x) * c.eps(), {x}); !v) return v;
    if (auto v = same("bilinearity", c.eps() * m.right_action(x), a.right_mult(x) * c.eps(), {x}); !v) return v;
  }
  TensorChain ccc = tensor_chain({m, m, m});
  if (auto v = same("coassoc", ccc.proj() * kron(dl, id(f, n)) * dl, ccc.proj() * kron(id(f, n), dl) * dl); !v)
    return v;
  if (auto v = same("counit-left", m.lact() * kron(c.eps(), id(f, n)) * dl, id(f, n)); !v) return v;
  if (auto v = same("counit-right", m.ract() * kron(id(f, n), c.eps()) * dl, id(f, n)); !v) return v;
  return Verdict::pass();
}

Coring make_coring(const Bimodule& c, const Mat& delta_lift, const Mat& eps) {
  Coring r = Coring::raw(c, delta_lift, eps);
  require(check_coring(r), "coring");
  return Coring::raw(c, r.cc().sect() * r.delta(), eps);
}

// ---------------------------------------------------------------- Comodule

Comodule Comodule::raw(const Coring& c, const Bimodule& m, const Mat& rho_lift) {
  if (!(m.right_alg() == c.base())) throw DimensionMismatch("comodule: module is not over the coring's algebra");
  expect_shape(rho_lift, m.dim() * c.dim(), m.dim(), "comodule coaction");
  Comodule r;
  r.c_ = c;
  r.m_ = m;
  r.rho_lift_ = rho_lift;
  r.mc_ = tensor_over(m, c.bimodule());
  return r;
}

Verdict check_comodule(const Comodule& m) {
  const Coring& c = m.coring();
  const Bimodule& mod = m.module();
  const Field f = c.field();
  const Mat& P = m.mc().proj();
  const Mat& rl = m.rho_lift();
  for (std::size_t x = 0; x < c.base().dim(); ++x)
    if (auto v = same("A-linearity", P * rl * mod.right_action(x),
                      P * kron(id(f, m.dim()), c.bimodule().right_action(x)) * rl, {x});
        !v)
      return v;
  TensorChain mcc = tensor_chain({mod, c.bimodule(), c.bimodule()});
  if (auto v = same("coassoc", mcc.proj() * kron(rl, id(f, c.dim())) * rl,
                    mcc.proj() * kron(id(f, m.dim()), c.delta_lift()) * rl);
      !v)
    return v;
  if (auto v = same("counit", mod.ract() * kron(id(f, m.dim()), c.eps()) * rl, id(f, m.dim())); !v) return v;
  return Verdict::pass();
}

Comodule make_comodule(const Coring& c, const Bimodule& m, const Mat& rho_lift) {
  Comodule r = Comodule::raw(c, m, rho_lift);
  require(check_comodule(r), "comodule");
  return Comodule::raw(c, m, r.mc().sect() * r.rho());
}

Comodule regular_comodule(const Coring& c) { return Comodule::raw(c, c.bimodule(), c.delta_lift()); }

Comodule direct_sum(const Comodule& m, const Comodule& n) {
  const Coring& c = m.coring();
  const Field f = c.field();
  const std::size_t dc = c.dim(), dm = m.dim(), dn = n.dim();
  Mat rho(f, (dm + dn) * dc, dm + dn);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t r = 0; r < dm * dc; ++r) rho(r, i) = m.rho_lift()(r, i);
  for (std::size_t j = 0; j < dn; ++j)
    for (std::size_t r = 0; r < dn * dc; ++r) rho((dm + r / dc) * dc + r % dc, dm + j) = n.rho_lift()(r, j);
  // only the right structure matters; keep the left one when both sides agree
  Bimodule sum = m.module().left_alg() == n.module().left_alg()
                     ? direct_sum(m.module(), n.module())
                     : direct_sum(forget_left(m.module()), forget_left(n.module()));
  return Comodule::raw(c, sum, rho);
}

Comodule tensor_left(const Bimodule& n, const Comodule& m) {
  const Field f = n.field();
  TensorChain nm = tensor_over(n, m.module());
  Mat lift = kron(nm.proj(), id(f, m.coring().dim())) * kron(id(f, n.dim()), m.rho_lift()) * nm.sect();
  return Comodule::raw(m.coring(), nm.outer_bimodule(), lift);
}

// ---------------------------------------------------------------- LeftComodule

LeftComodule LeftComodule::raw(const Coring& c, const Bimodule& n, const Mat& lambda_lift) {
  if (!(n.left_alg() == c.base())) throw DimensionMismatch("left comodule: module is not over the coring's algebra");
  expect_shape(lambda_lift, c.dim() * n.dim(), n.dim(), "left coaction");
  LeftComodule r;
  r.c_ = c;
  r.n_ = n;
  r.lambda_lift_ = lambda_lift;
  r.cn_ = tensor_over(c.bimodule(), n);
  return r;
}

Verdict check_left_comodule(const LeftComodule& n) {
  const Coring& c = n.coring();
  const Bimodule& mod = n.module();
  const Field f = c.field();
  const Mat& P = n.cn().proj();
  const Mat& ll = n.lambda_lift();
  for (std::size_t x = 0; x < c.base().dim(); ++x)
    if (auto v = same("left-A-linearity", P * ll * mod.left_action(x),
                      P * kron(c.bimodule().left_action(x), id(f, n.dim())) * ll, {x});
        !v)
      return v;
  TensorChain ccn = tensor_chain({c.bimodule(), c.bimodule(), mod});
  if (auto v = same("left-coassoc", ccn.proj() * kron(c.delta_lift(), id(f, n.dim())) * ll,
                    ccn.proj() * kron(id(f, c.dim()), ll) * ll);
      !v)
    return v;
  if (auto v = same("left-counit", mod.lact() * kron(c.eps(), id(f, n.dim())) * ll, id(f, n.dim())); !v) return v;
  return Verdict::pass();
}

LeftComodule regular_left_comodule(const Coring& c) { return LeftComodule::raw(c, c.bimodule(), c.delta_lift()); }

// ---------------------------------------------------------------- maps

Verdict check_colinear(const Mat& f, const Comodule& m, const Comodule& n) {
  expect_shape(f, n.dim(), m.dim(), "colinear map");
  if (!(m.coring() == n.coring())) throw DimensionMismatch("check_colinear: comodules over different corings");
  const Coring& c = m.coring();
  for (std::size_t x = 0; x < c.base().dim(); ++x)
    if (auto v = same("A-linearity", f * m.module().right_action(x), n.module().right_action(x) * f, {x}); !v)
      return v;
  const Mat& P = n.mc().proj();
  return same("colinearity", P * n.rho_lift() * f, P * kron(f, id(c.field(), c.dim())) * m.rho_lift());
}

Verdict check_bicomodule(const Coring& c, const Coring& d, const Bimodule& m, const Mat& lambda_lift,
                         const Mat& sigma_lift) {
  const Field f = c.field();
  LeftComodule left = LeftComodule::raw(c, m, lambda_lift);
  Comodule right = Comodule::raw(d, m, sigma_lift);
  if (auto v = check_left_comodule(left); !v) return v;
  if (auto v = check_comodule(right); !v) return v;
  for (std::size_t b = 0; b < d.base().dim(); ++b)
    if (auto v = same("lambda-right-linearity", left.cn().proj() * lambda_lift * m.right_action(b),
                      left.cn().proj() * kron(id(f, c.dim()), m.right_action(b)) * lambda_lift, {b});
        !v)
      return v;
  for (std::size_t a = 0; a < c.base().dim(); ++a)
    if (auto v = same("sigma-left-linearity", right.mc().proj() * sigma_lift * m.left_action(a),
                      right.mc().proj() * kron(m.left_action(a), id(f, d.dim())) * sigma_lift, {a});
        !v)
      return v;

  TensorChain cmd = tensor_chain({c.bimodule(), m, d.bimodule()});
  Verdict direct = same("bicomodule", cmd.proj() * kron(lambda_lift, id(f, d.dim())) * sigma_lift,
                        cmd.proj() * kron(id(f, c.dim()), sigma_lift) * lambda_lift);

  // lambda : M -> C (x)_A M as a map of right D-comodules.
  Comodule cm = tensor_left(c.bimodule(), right);
  Mat lam = left.cn().proj() * lambda_lift;
  Verdict as_colinear = same("bicomodule", cm.mc().proj() * cm.rho_lift() * lam,
                             cm.mc().proj() * kron(lam, id(f, d.dim())) * sigma_lift);
  if (direct.ok != as_colinear.ok) throw Error("bicomodule: the two formulations disagree");
  return direct;
}

Cotensor cotensor(const Comodule& m, const LeftComodule& n) {
  if (!(m.coring() == n.coring())) throw DimensionMismatch("cotensor: comodules over different corings");
  const Coring& c = m.coring();
  const Field f = c.field();
  Cotensor r;
  r.mn = tensor_over(m.module(), n.module());
  TensorChain mcn = tensor_chain({m.module(), c.bimodule(), n.module()});
  Mat diff = kron(m.rho_lift(), id(f, n.dim())) - kron(id(f, m.dim()), n.lambda_lift());
  r.basis = kernel(mcn.proj() * diff * r.mn.sect());
  return r;
}

// ---------------------------------------------------------------- dual ring

Mat dual_product(const Coring& c, const Mat& f, const Mat& g) {
  return g * c.bimodule().ract() * kron(id(c.field(), c.dim()), f) * c.delta_lift();
}

std::optional<Vec> dual_coords(const DualRing& r, const Mat& f) { return coords_in(r.basis, f); }

DualRing dual_ring(const Coring& c) {
  const Field f = c.field();
  const Algebra& a = c.base();
  std::vector<Mat> dst;
  for (std::size_t x = 0; x < a.dim(); ++x) dst.push_back(a.left_mult(x));
  DualRing r;
  r.basis = hom_space(f, c.dim(), a.dim(), c.bimodule().left_actions(), dst);
  const std::size_t d = r.basis.size();
  Mat mult(f, d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto v = coords_in(r.basis, dual_product(c, r.basis[i], r.basis[j]));
      if (!v) throw Error("dual ring: product leaves the space of left linear maps");
      mult.set_col(i * d + j, *v);
    }
  auto unit = coords_in(r.basis, c.eps());
  if (!unit) throw Error("dual ring: counit is not left linear");
  r.alg = make_algebra(f, d, mult, *unit);
  return r;
}

Verdict check_coring_morphism(const Mat& gamma, const Coring& c, const Coring& d) {
  if (!(c.base() == d.base())) throw DimensionMismatch("coring morphism: base algebras differ");
  expect_shape(gamma, d.dim(), c.dim(), "coring morphism");
  for (std::size_t x = 0; x < c.base().dim(); ++x) {
    if (auto v = same("bimodule-map", gamma * c.bimodule().left_action(x), d.bimodule().left_action(x) * gamma, {x});
        !v)
      return v;
    if (auto v =
            same("bimodule-map", gamma * c.bimodule().right_action(x), d.bimodule().right_action(x) * gamma, {x});
        !v)
      return v;
  }
  if (auto v = same("counit", d.eps() * gamma, c.eps()); !v) return v;
  const Mat& P = d.cc().proj();
  return same("coproduct", P * d.delta_lift() * gamma, P * kron(gamma, gamma) * c.delta_lift());
}

}  // namespace crg

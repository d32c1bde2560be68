#include "crg/extension.hpp"

#include <algorithm>
#include <cmath>

#include "crg/constructions.hpp"

namespace crg {

namespace {

Mat id(Field f, std::size_t n) { return Mat::identity(f, n); }

Mat unit_column(Field f, std::size_t n, std::size_t i) { return Mat::column(f, unit_vec(f, n, i)); }

// nu(- (x) e_b): C -> A.
Mat slice(const Measuring& m, std::size_t b) {
  return m.nu * kron(id(m.c.field(), m.c.dim()), unit_column(m.c.field(), m.b.dim(), b));
}

// c -> c_(1) g(c_(2)) for g: C -> A.
Mat twist(const Coring& c, const Mat& g) {
  return c.bimodule().ract() * kron(id(c.field(), c.dim()), g) * c.delta_lift();
}

}  // namespace

// ---------------------------------------------------------------- measurings

Verdict check_measuring(const Measuring& m) {
  const Coring& c = m.c;
  const Algebra& a = c.base();
  const Algebra& b = m.b;
  const Field f = c.field();
  if (m.nu.rows() != a.dim() || m.nu.cols() != c.dim() * b.dim())
    throw DimensionMismatch("measuring: nu must be dim(A) x dim(C)*dim(B)");
  for (std::size_t x = 0; x < a.dim(); ++x)
    if (auto w = first_diff_col(m.nu * kron(c.bimodule().left_action(x), id(f, b.dim())), a.left_mult(x) * m.nu))
      return Verdict::fail("A-linearity", {x, *w});
  if (auto w = first_diff_col(m.nu * kron(id(f, c.dim()), b.unit_col()), c.eps())) return Verdict::fail("unit", {*w});
  std::vector<Mat> slices;
  for (std::size_t y = 0; y < b.dim(); ++y) slices.push_back(slice(m, y));
  for (std::size_t y = 0; y < b.dim(); ++y) {
    Mat t = twist(c, slices[y]);
    for (std::size_t z = 0; z < b.dim(); ++z) {
      Mat lhs(f, a.dim(), c.dim());
      const Vec yz = b.mult().col(y * b.dim() + z);
      for (std::size_t l = 0; l < b.dim(); ++l)
        if (!yz[l].is_zero()) lhs = lhs + slices[l].scaled(yz[l]);
      if (auto w = first_diff_col(lhs, slices[z] * t)) return Verdict::fail("multiplicativity", {y, z, *w});
    }
  }
  return Verdict::pass();
}

std::vector<Measuring> enumerate_measurings(const Coring& c, const Algebra& b) {
  const Field f = c.field();
  if (!f.is_finite()) throw NonFiniteField("enumerate_measurings needs a prime field");
  const Algebra& a = c.base();
  std::vector<Mat> src, dst;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    src.push_back(kron(c.bimodule().left_action(x), id(f, b.dim())));
    dst.push_back(a.left_mult(x));
  }
  std::vector<Mat> basis = hom_space(f, c.dim() * b.dim(), a.dim(), src, dst);
  const std::size_t r = basis.size();
  const double p = f.characteristic();
  if (static_cast<double>(r) * std::log(p) > std::log(static_cast<double>(limits().max_enum)) + 1e-9)
    throw SizeLimit("enumerate_measurings: p^" + std::to_string(r) + " candidates exceed limit " +
                    std::to_string(limits().max_enum));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= f.characteristic();
  std::vector<Measuring> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat nu(f, a.dim(), c.dim() * b.dim());
    std::uint64_t rest = code;
    for (std::size_t i = r; i-- > 0;) {
      const std::uint64_t coef = rest % f.characteristic();
      rest /= f.characteristic();
      if (coef) nu = nu + basis[i].scaled(f.element(coef));
    }
    Measuring m{c, b, nu};
    if (check_measuring(m)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const Measuring& x, const Measuring& y) { return lex_less(x.nu, y.nu); });
  return out;
}

AlgebraMap measuring_to_algebra_map(const Measuring& m, const DualRing& dual) {
  require(check_measuring(m), "measuring");
  Mat chi(m.c.field(), dual.alg.dim(), m.b.dim());
  for (std::size_t y = 0; y < m.b.dim(); ++y) {
    auto v = dual_coords(dual, slice(m, y));
    if (!v) throw Error("measuring_to_algebra_map: slice is not left linear");
    chi.set_col(y, *v);
  }
  return make_algebra_map(m.b, dual.alg, chi);
}

Measuring algebra_map_to_measuring(const Coring& c, const DualRing& dual, const AlgebraMap& chi) {
  require(check_algebra_map(chi), "algebra map");
  if (!(chi.target == dual.alg)) throw DimensionMismatch("algebra_map_to_measuring: target is not the dual ring");
  const Field f = c.field();
  const std::size_t db = chi.source.dim();
  Mat nu(f, c.base().dim(), c.dim() * db);
  for (std::size_t y = 0; y < db; ++y) {
    Mat g(f, c.base().dim(), c.dim());
    for (std::size_t l = 0; l < dual.basis.size(); ++l)
      if (!chi.matrix(l, y).is_zero()) g = g + dual.basis[l].scaled(chi.matrix(l, y));
    for (std::size_t x = 0; x < c.dim(); ++x) nu.set_col(x * db + y, g.col(x));
  }
  Measuring m{c, chi.source, nu};
  require(check_measuring(m), "measuring");
  return m;
}

Mat action_from_measuring(const Measuring& m) {
  const std::size_t db = m.b.dim();
  Mat ract(m.c.field(), m.c.dim(), m.c.dim() * db);
  for (std::size_t y = 0; y < db; ++y) {
    Mat t = twist(m.c, slice(m, y));
    for (std::size_t x = 0; x < m.c.dim(); ++x) ract.set_col(x * db + y, t.col(x));
  }
  return ract;
}

Bimodule extension_bimodule(const Coring& c, const Algebra& b, const Mat& ract) {
  return Bimodule::raw(c.base(), b, c.dim(), c.bimodule().lact(), ract);
}

Verdict check_extension_action(const Coring& c, const Algebra& b, const Mat& ract) {
  Bimodule m = extension_bimodule(c, b, ract);
  if (auto v = check_bimodule(m); !v) return v;
  const Mat& P = c.cc().proj();
  for (std::size_t y = 0; y < b.dim(); ++y)
    if (auto w = first_diff_col(P * c.delta_lift() * m.right_action(y),
                                P * kron(id(c.field(), c.dim()), m.right_action(y)) * c.delta_lift()))
      return Verdict::fail("delta-B-linearity", {y, *w});
  return Verdict::pass();
}

Measuring measuring_from_action(const Coring& c, const Algebra& b, const Mat& ract) {
  require(check_extension_action(c, b, ract), "right action");
  return Measuring{c, b, c.eps() * ract};
}

// ---------------------------------------------------------------- extensions

Comodule CoringExtension::as_comodule() const { return Comodule::raw(d, bimodule(), sigma_lift); }

Verdict check_coring_extension(const CoringExtension& e) {
  if (e.ract.rows() != e.c.dim() || e.ract.cols() != e.c.dim() * e.b().dim())
    throw DimensionMismatch("coring extension: action has wrong shape");
  if (e.sigma_lift.rows() != e.c.dim() * e.d.dim() || e.sigma_lift.cols() != e.c.dim())
    throw DimensionMismatch("coring extension: coaction has wrong shape");
  if (auto v = check_extension_action(e.c, e.b(), e.ract); !v) return v;
  return check_bicomodule(e.c, e.d, e.bimodule(), e.c.delta_lift(), e.sigma_lift);
}

CoringExtension make_coring_extension(const Coring& c, const Coring& d, const Mat& ract, const Mat& sigma_lift) {
  CoringExtension e{c, d, ract, sigma_lift};
  require(check_coring_extension(e), "coring extension");
  Comodule m = e.as_comodule();
  e.sigma_lift = m.mc().sect() * m.rho();
  return e;
}

CoringExtension identity_extension(const Coring& c) {
  return make_coring_extension(c, c, c.bimodule().ract(), c.delta_lift());
}

CoringExtension extension_from_coring_map(const Mat& gamma, const Coring& c, const Coring& d) {
  if (auto v = check_coring_morphism(gamma, c, d); !v) throw NotCoringMorphism("coring morphism", v);
  return make_coring_extension(c, d, c.bimodule().ract(), kron(id(c.field(), c.dim()), gamma) * c.delta_lift());
}

CoringExtension extension_to_trivial(const Coring& c, const Algebra& b, const Mat& ract) {
  return make_coring_extension(c, trivial_coring(b), ract, kron(id(c.field(), c.dim()), b.unit_col()));
}

// ---------------------------------------------------------------- induced functor

Bimodule induced_module(const CoringExtension& e, const Comodule& m) {
  if (!(m.coring() == e.c)) throw DimensionMismatch("induced_module: comodule is over a different coring");
  const Field f = e.c.field();
  Bimodule cb = e.bimodule();
  std::vector<Mat> r;
  for (std::size_t y = 0; y < e.b().dim(); ++y) {
    Mat nu = e.c.eps() * cb.right_action(y);
    r.push_back(m.module().ract() * kron(id(f, m.dim()), nu) * m.rho_lift());
  }
  Bimodule out = Bimodule::from_actions(m.module().left_alg(), e.b(), m.dim(), m.module().left_actions(), r);
  require(check_bimodule(out), "induced module");
  return out;
}

Mat induced_action(const CoringExtension& e, const Comodule& m) { return induced_module(e, m).ract(); }

Comodule induced_coaction(const CoringExtension& e, const Comodule& m) {
  const Field f = e.c.field();
  Bimodule mb = induced_module(e, m);
  TensorChain md = tensor_over(mb, e.d.bimodule());
  TensorChain mcd = tensor_chain({m.module(), e.bimodule(), e.d.bimodule()});
  auto j = descends(mcd.proj() * kron(m.rho_lift(), id(f, e.d.dim())), md.quotient());
  if (!j) throw Error("induced coaction: coaction does not respect the induced action");
  if (rank(*j) != md.dim()) throw PurityFailure("induced coaction: M (x)_B D does not embed into M (x)_A C (x)_B D");
  Mat x = mcd.proj() * kron(id(f, m.dim()), e.sigma_lift) * m.rho_lift();
  auto y = solve(*j, x);
  if (!y) throw Error("induced coaction: (M (x)_A sigma) rho does not factor through M (x)_B D");
  return make_comodule(e.d, mb, md.sect() * *y);
}

Mat apply_functor(const CoringExtension& e, const Mat& f, const Comodule& m, const Comodule& n) {
  if (auto v = check_colinear(f, m, n); !v) throw NotColinear("map", v);
  Comodule fm = induced_coaction(e, m), fn = induced_coaction(e, n);
  if (auto v = check_colinear(f, fm, fn); !v) throw Error("apply_functor: image is not D-colinear");
  return f;
}

CoringExtension compose_extensions(const CoringExtension& e1, const CoringExtension& e2) {
  if (!(e1.d == e2.c)) throw MiddleMismatch("compose_extensions: target of the first is not the source of the second");
  Comodule c_over_d = e1.as_comodule();
  Comodule image = induced_coaction(e2, c_over_d);
  return make_coring_extension(e1.c, e2.d, image.module().ract(), image.rho_lift());
}

}  // namespace crg

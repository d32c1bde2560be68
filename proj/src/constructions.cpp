#include "crg/constructions.hpp"

namespace crg {

namespace {

Mat id(Field f, std::size_t n) { return Mat::identity(f, n); }

Mat unit_column(Field f, std::size_t n, std::size_t i) { return Mat::column(f, unit_vec(f, n, i)); }

}  // namespace

// ---------------------------------------------------------------- coalgebras

Verdict check_coalgebra(const Coalgebra& c) {
  const Field f = c.field;
  const std::size_t n = c.dim;
  if (c.delta.rows() != n * n || c.delta.cols() != n || c.eps.rows() != 1 || c.eps.cols() != n)
    throw DimensionMismatch("coalgebra: structure maps do not match dim");
  if (auto w = first_diff_col(kron(c.delta, id(f, n)) * c.delta, kron(id(f, n), c.delta) * c.delta))
    return Verdict::fail("coassoc", {*w});
  if (auto w = first_diff_col(kron(c.eps, id(f, n)) * c.delta, id(f, n))) return Verdict::fail("counit-left", {*w});
  if (auto w = first_diff_col(kron(id(f, n), c.eps) * c.delta, id(f, n))) return Verdict::fail("counit-right", {*w});
  return Verdict::pass();
}

Coalgebra make_coalgebra(Field f, std::size_t dim, const Mat& delta, const Mat& eps) {
  Coalgebra c{f, dim, delta, eps};
  require(check_coalgebra(c), "coalgebra");
  return c;
}

Coalgebra group_coalgebra(Field f, std::size_t n) {
  if (n == 0) throw DimensionMismatch("group_coalgebra: need at least one group-like");
  Mat delta(f, n * n, n), eps(f, 1, n);
  for (std::size_t g = 0; g < n; ++g) {
    delta(g * n + g, g) = f.one();
    eps(0, g) = f.one();
  }
  return make_coalgebra(f, n, delta, eps);
}

Coring coalgebra_as_coring(const Coalgebra& c) {
  Algebra k = ground_algebra(c.field);
  Bimodule m = Bimodule::from_actions(k, k, c.dim, {id(c.field, c.dim)}, {id(c.field, c.dim)});
  return make_coring(m, c.delta, c.eps);
}

// ---------------------------------------------------------------- trivial / Sweedler

Coring trivial_coring(const Algebra& a) {
  const Field f = a.field();
  return make_coring(regular_bimodule(a), kron(a.unit_col(), id(f, a.dim())), id(f, a.dim()));
}

TensorChain sweedler_chain(const AlgebraMap& iota) {
  Bimodule reg = regular_bimodule(iota.target);
  return tensor_over(restrict_right(reg, iota), restrict_left(reg, iota));
}

Coring sweedler_coring(const AlgebraMap& iota) {
  require(check_algebra_map(iota), "algebra map");
  const Algebra& a = iota.target;
  const Field f = a.field();
  TensorChain ch = sweedler_chain(iota);
  Bimodule c = ch.outer_bimodule();
  Mat left = ch.proj() * kron(id(f, a.dim()), a.unit_col());   // x -> x (x) 1
  Mat right = ch.proj() * kron(a.unit_col(), id(f, a.dim()));  // y -> 1 (x) y
  return make_coring(c, kron(left, right) * ch.sect(), a.mult() * ch.sect());
}

// ---------------------------------------------------------------- comatrix

RightDual right_dual(const Bimodule& sigma) {
  const Algebra& a = sigma.right_alg();
  const Algebra& b = sigma.left_alg();
  const Field f = a.field();
  std::vector<Mat> dst;
  for (std::size_t x = 0; x < a.dim(); ++x) dst.push_back(a.right_mult(x));
  RightDual r;
  r.basis = hom_space(f, sigma.dim(), a.dim(), sigma.right_actions(), dst);
  const std::size_t d = r.basis.size();
  auto in_dual = [&](const Mat& g) {
    auto v = coords_in(r.basis, g);
    if (!v) throw Error("right dual: action leaves the space of right linear functionals");
    return *v;
  };
  std::vector<Mat> lm, rm;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    Mat m(f, d, d);
    for (std::size_t j = 0; j < d; ++j) m.set_col(j, in_dual(a.left_mult(x) * r.basis[j]));
    lm.push_back(m);
  }
  for (std::size_t y = 0; y < b.dim(); ++y) {
    Mat m(f, d, d);
    for (std::size_t j = 0; j < d; ++j) m.set_col(j, in_dual(r.basis[j] * sigma.left_action(y)));
    rm.push_back(m);
  }
  r.bimodule = Bimodule::from_actions(a, b, d, lm, rm);
  return r;
}

Verdict check_dual_basis(const Bimodule& sigma, const DualBasis& db) {
  const Algebra& a = sigma.right_alg();
  const Field f = a.field();
  if (db.elements.size() != db.functionals.size())
    throw DimensionMismatch("dual basis: elements and functionals differ in number");
  for (std::size_t i = 0; i < db.functionals.size(); ++i) {
    const Mat& g = db.functionals[i];
    if (g.rows() != a.dim() || g.cols() != sigma.dim() || db.elements[i].size() != sigma.dim())
      throw DimensionMismatch("dual basis: wrong shape at entry " + std::to_string(i));
    for (std::size_t x = 0; x < a.dim(); ++x)
      if (!(g * sigma.right_action(x) == a.right_mult(x) * g)) return Verdict::fail("functional", {i});
  }
  for (std::size_t s = 0; s < sigma.dim(); ++s) {
    Vec sum = zero_vec(f, sigma.dim());
    for (std::size_t i = 0; i < db.elements.size(); ++i) {
      Vec t = right_action_by(sigma, db.functionals[i].col(s)).apply(db.elements[i]);
      for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += t[r];
    }
    if (sum != unit_vec(f, sigma.dim(), s)) return Verdict::fail("dual-basis", {s});
  }
  return Verdict::pass();
}

TensorChain comatrix_chain(const Bimodule& sigma, const RightDual& dual) { return tensor_over(dual.bimodule, sigma); }

Coring comatrix_coring(const Bimodule& sigma, const DualBasis& db) {
  if (auto v = check_dual_basis(sigma, db); !v) throw DualBasisInvalid("dual basis", v);
  const Algebra& a = sigma.right_alg();
  const Field f = a.field();
  RightDual dual = right_dual(sigma);
  const std::size_t ds = dual.bimodule.dim(), n = sigma.dim();
  TensorChain ch = comatrix_chain(sigma, dual);
  Mat lift(f, ch.ambient_dim() * ch.ambient_dim(), ch.ambient_dim());
  Mat sum(f, ch.dim() * ch.dim(), ch.ambient_dim());
  for (std::size_t i = 0; i < db.elements.size(); ++i) {
    Mat u = ch.proj() * kron(id(f, ds), Mat::column(f, db.elements[i]));
    Mat v = ch.proj() * kron(Mat::column(f, *coords_in(dual.basis, db.functionals[i])), id(f, n));
    sum = sum + kron(u, v);
  }
  Mat ev(f, a.dim(), ds * n);
  for (std::size_t j = 0; j < ds; ++j)
    for (std::size_t s = 0; s < n; ++s) ev.set_col(j * n + s, dual.basis[j].col(s));
  return make_coring(ch.outer_bimodule(), sum * ch.sect(), ev * ch.sect());
}

// ---------------------------------------------------------------- entwinings

Mat flip(Field f, std::size_t dim_c, std::size_t dim_a) {
  Mat m(f, dim_a * dim_c, dim_c * dim_a);
  for (std::size_t c = 0; c < dim_c; ++c)
    for (std::size_t a = 0; a < dim_a; ++a) m(a * dim_c + c, c * dim_a + a) = f.one();
  return m;
}

Coring entwining_coring(const Entwining& e) {
  const Algebra& a = e.alg;
  const Coalgebra& c = e.coalg;
  const Field f = a.field();
  const std::size_t da = a.dim(), dc = c.dim;
  if (e.psi.rows() != da * dc || e.psi.cols() != dc * da) throw DimensionMismatch("entwining: psi has wrong shape");
  std::vector<Mat> lm, rm;
  for (std::size_t x = 0; x < da; ++x) {
    lm.push_back(kron(a.left_mult(x), id(f, dc)));
    rm.push_back(kron(a.mult(), id(f, dc)) * kron(id(f, da), e.psi * kron(id(f, dc), unit_column(f, da, x))));
  }
  Bimodule m = Bimodule::from_actions(a, a, da * dc, lm, rm);
  Mat insert_one = kron(kron(id(f, dc), a.unit_col()), id(f, dc));  // c (x) c' -> c (x) 1 (x) c'
  Mat delta = kron(id(f, da), insert_one * c.delta);
  return make_coring(m, delta, kron(id(f, da), c.eps));
}

Mat twisted_product(const Entwining& e, const Mat& f, const Mat& g) {
  const Field k = e.alg.field();
  const std::size_t da = e.alg.dim(), dc = e.coalg.dim;
  return e.alg.mult() * kron(id(k, da), g) * e.psi * kron(id(k, dc), f) * e.coalg.delta;
}

Algebra twisted_convolution(const Entwining& e) {
  entwining_coring(e);
  const Field k = e.alg.field();
  const std::size_t da = e.alg.dim(), dc = e.coalg.dim, d = da * dc;
  auto unit_mat = [&](std::size_t x) {
    Mat m(k, da, dc);
    m(x / dc, x % dc) = k.one();
    return m;
  };
  Mat mult(k, d, d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) mult.set_col(x * d + y, flatten(twisted_product(e, unit_mat(x), unit_mat(y))));
  return make_algebra(k, d, mult, flatten(e.alg.unit_col() * e.coalg.eps));
}

AlgebraMap twisted_to_dual(const Entwining& e, const DualRing& dual) {
  const Field k = e.alg.field();
  const std::size_t da = e.alg.dim(), dc = e.coalg.dim, d = da * dc;
  Algebra conv = twisted_convolution(e);
  Mat m(k, dual.alg.dim(), d);
  for (std::size_t x = 0; x < d; ++x) {
    Mat fx(k, da, dc);
    fx(x / dc, x % dc) = k.one();
    auto v = dual_coords(dual, e.alg.mult() * kron(id(k, da), fx));
    if (!v) throw Error("twisted_to_dual: image is not left linear");
    m.set_col(x, *v);
  }
  AlgebraMap phi = make_algebra_map(conv, dual.alg, m);
  if (dual.alg.dim() != d || rank(m) != d) throw Error("twisted_to_dual: map is not bijective");
  return phi;
}

// ---------------------------------------------------------------- fixtures

Algebra diagonal_algebra(Field f) {
  Mat m(f, 2, 4);
  m(0, 0) = f.one();
  m(1, 3) = f.one();
  return make_algebra(f, 2, m, {f.one(), f.one()});
}

Algebra cyclic_group_algebra(Field f, std::size_t n) {
  Mat m(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m((i + j) % n, i * n + j) = f.one();
  return make_algebra(f, n, m, unit_vec(f, n, 0));
}

Algebra matrix_algebra(Field f, std::size_t n) {
  const std::size_t d = n * n;
  Mat m(f, d, d * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) m(i * n + l, (i * n + j) * d + j * n + l) = f.one();
  Vec unit = zero_vec(f, d);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
  return make_algebra(f, d, m, unit);
}

Algebra upper_triangular_algebra(Field f) {
  // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22.
  Mat m(f, 3, 9);
  m(0, 0 * 3 + 0) = f.one();
  m(1, 0 * 3 + 1) = f.one();
  m(1, 1 * 3 + 2) = f.one();
  m(2, 2 * 3 + 2) = f.one();
  return make_algebra(f, 3, m, {f.one(), f.zero(), f.one()});
}

Coring sweedler_fixture(Field f) { return sweedler_coring(unit_map(diagonal_algebra(f))); }

}  // namespace crg

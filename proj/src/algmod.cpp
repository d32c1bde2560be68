#include "crg/algmod.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace crg {

namespace {

Mat action_matrix(const Mat& act, std::size_t dim, std::size_t other, std::size_t a, bool left) {
  Mat m(act.field(), dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t c = left ? a * dim + x : x * other + a;
    for (std::size_t r = 0; r < dim; ++r) m(r, x) = act(r, c);
  }
  return m;
}

Mat combine(Field f, std::size_t dim, const std::vector<Mat>& mats, const Vec& x) {
  Mat m(f, dim, dim);
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!x[i].is_zero()) m = m + mats[i].scaled(x[i]);
  return m;
}

}  // namespace

// ---------------------------------------------------------------- Algebra

Algebra Algebra::raw(Field f, std::size_t dim, Mat mult, Vec unit) {
  if (mult.rows() != dim || mult.cols() != dim * dim || unit.size() != dim)
    throw DimensionMismatch("algebra: structure constants do not match dim " + std::to_string(dim));
  Algebra a;
  a.field_ = f;
  a.dim_ = dim;
  a.mult_ = std::move(mult);
  a.unit_ = std::move(unit);
  for (std::size_t i = 0; i < dim; ++i) {
    a.left_.push_back(action_matrix(a.mult_, dim, dim, i, true));
    a.right_.push_back(action_matrix(a.mult_, dim, dim, i, false));
  }
  return a;
}

Mat Algebra::left_mult_by(const Vec& a) const { return combine(field_, dim_, left_, a); }
Mat Algebra::right_mult_by(const Vec& a) const { return combine(field_, dim_, right_, a); }

Vec Algebra::product(const Vec& x, const Vec& y) const { return left_mult_by(x).apply(y); }

Verdict check_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  // (e_i e_j) e_l = e_i (e_j e_l)  <=>  R_l L_i e_j = L_i R_l e_j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      Mat lhs = a.right_mult(l) * a.left_mult(i);
      Mat rhs = a.left_mult(i) * a.right_mult(l);
      if (lhs == rhs) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (lhs.col(j) != rhs.col(j)) return Verdict::fail("associativity", {i, j, l});
    }
  Mat lu = a.left_mult_by(a.unit()), ru = a.right_mult_by(a.unit());
  Mat id = Mat::identity(a.field(), n);
  for (std::size_t x = 0; x < n; ++x)
    if (lu.col(x) != id.col(x) || ru.col(x) != id.col(x)) return Verdict::fail("unitality", {x});
  return Verdict::pass();
}

Algebra make_algebra(Field f, std::size_t dim, const Mat& mult, const Vec& unit) {
  Algebra a = Algebra::raw(f, dim, mult, unit);
  require(check_algebra(a), "algebra");
  return a;
}

Mat mult_from_tensor(Field f, std::size_t dim, const std::vector<std::vector<Vec>>& t) {
  if (t.size() != dim) throw DimensionMismatch("multiplication tensor: wrong first extent");
  Mat m(f, dim, dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (t[i].size() != dim) throw DimensionMismatch("multiplication tensor: wrong second extent");
    for (std::size_t j = 0; j < dim; ++j) {
      if (t[i][j].size() != dim) throw DimensionMismatch("multiplication tensor: wrong third extent");
      m.set_col(i * dim + j, t[i][j]);
    }
  }
  return m;
}

Algebra ground_algebra(Field f) { return Algebra::raw(f, 1, Mat::identity(f, 1), {f.one()}); }

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  Mat m(a.field(), n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set_col(i * n + j, a.mult().col(j * n + i));
  return make_algebra(a.field(), n, m, a.unit());
}

// ---------------------------------------------------------------- maps

Verdict check_algebra_map(const AlgebraMap& f) {
  const auto& s = f.source;
  const auto& t = f.target;
  if (f.matrix.rows() != t.dim() || f.matrix.cols() != s.dim())
    throw DimensionMismatch("algebra map: matrix shape does not match source/target");
  if (f.matrix.apply(s.unit()) != t.unit()) return Verdict::fail("unit");
  // f(e_i e_j) = f(e_i) f(e_j)
  Mat lhs = f.matrix * s.mult();
  Mat rhs = t.mult() * kron(f.matrix, f.matrix);
  if (lhs == rhs) return Verdict::pass();
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (lhs.col(i * s.dim() + j) != rhs.col(i * s.dim() + j)) return Verdict::fail("multiplicativity", {i, j});
  return Verdict::pass();
}

AlgebraMap make_algebra_map(const Algebra& source, const Algebra& target, const Mat& matrix) {
  AlgebraMap f{source, target, matrix};
  require(check_algebra_map(f), "algebra map");
  return f;
}

AlgebraMap identity_map(const Algebra& a) { return {a, a, Mat::identity(a.field(), a.dim())}; }

AlgebraMap unit_map(const Algebra& a) { return {ground_algebra(a.field()), a, a.unit_col()}; }

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  if (!(f.target == g.source)) throw DimensionMismatch("algebra map composition: middle algebras differ");
  return {f.source, g.target, g.matrix * f.matrix};
}

std::vector<AlgebraMap> enumerate_algebra_maps(const Algebra& b, const Algebra& a) {
  const Field f = b.field();
  if (!f.is_finite()) throw NonFiniteField("enumerate_algebra_maps needs a prime field");
  const std::size_t db = b.dim(), da = a.dim();
  const double log_count = static_cast<double>(db * da) * std::log(static_cast<double>(f.characteristic()));
  if (log_count > std::log(static_cast<double>(limits().max_enum)) + 1e-9)
    throw SizeLimit("enumerate_algebra_maps: p^(" + std::to_string(db * da) + ") candidates exceed limit " +
                    std::to_string(limits().max_enum));

  // Highest basis index appearing in e_i e_j and in the unit: constraints
  // can be tested as soon as all involved images are assigned.
  auto support_max = [&](const Vec& v) {
    std::size_t m = 0;
    for (std::size_t l = 0; l < v.size(); ++l)
      if (!v[l].is_zero()) m = l;
    return m;
  };
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks_at(db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      std::size_t m = std::max({i, j, support_max(b.mult().col(i * db + j))});
      checks_at[m].push_back({i, j});
    }
  const std::size_t unit_at = db ? support_max(b.unit()) : 0;

  std::vector<Vec> images(db);
  std::vector<AlgebraMap> out;
  const std::uint64_t per_col = static_cast<std::uint64_t>(std::pow(f.characteristic(), da) + 0.5);

  auto image_of = [&](const Vec& x) {
    Vec y = zero_vec(f, da);
    for (std::size_t l = 0; l < db; ++l)
      if (!x[l].is_zero())
        for (std::size_t r = 0; r < da; ++r) y[r] += x[l] * images[l][r];
    return y;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t col) {
    if (col == db) {
      Mat m(f, da, db);
      for (std::size_t j = 0; j < db; ++j) m.set_col(j, images[j]);
      out.push_back({b, a, m});
      return;
    }
    for (std::uint64_t code = 0; code < per_col; ++code) {
      Vec v(da);
      std::uint64_t c = code;
      for (std::size_t r = da; r-- > 0;) {
        v[r] = f.element(c % f.characteristic());
        c /= f.characteristic();
      }
      images[col] = v;
      bool ok = true;
      if (col == unit_at && image_of(b.unit()) != a.unit()) ok = false;
      for (auto [i, j] : checks_at[col]) {
        if (!ok) break;
        if (image_of(b.mult().col(i * db + j)) != a.product(images[i], images[j])) ok = false;
      }
      if (ok) rec(col + 1);
    }
  };
  if (db == 0) return out;
  rec(0);
  std::sort(out.begin(), out.end(), [](const AlgebraMap& x, const AlgebraMap& y) { return lex_less(x.matrix, y.matrix); });
  return out;
}

std::optional<AlgebraMap> find_isomorphism(const Algebra& a, const Algebra& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  for (auto& m : enumerate_algebra_maps(a, b))
    if (rank(m.matrix) == a.dim()) return m;
  return std::nullopt;
}

// ---------------------------------------------------------------- Bimodule

Bimodule Bimodule::raw(const Algebra& l, const Algebra& r, std::size_t dim, Mat lact, Mat ract) {
  if (lact.rows() != dim || lact.cols() != l.dim() * dim)
    throw DimensionMismatch("bimodule: left action has shape " + std::to_string(lact.rows()) + "x" +
                            std::to_string(lact.cols()));
  if (ract.rows() != dim || ract.cols() != dim * r.dim())
    throw DimensionMismatch("bimodule: right action has shape " + std::to_string(ract.rows()) + "x" +
                            std::to_string(ract.cols()));
  Bimodule m;
  m.left_alg_ = l;
  m.right_alg_ = r;
  m.dim_ = dim;
  m.lact_ = std::move(lact);
  m.ract_ = std::move(ract);
  for (std::size_t a = 0; a < l.dim(); ++a) m.lmats_.push_back(action_matrix(m.lact_, dim, l.dim(), a, true));
  for (std::size_t a = 0; a < r.dim(); ++a) m.rmats_.push_back(action_matrix(m.ract_, dim, r.dim(), a, false));
  return m;
}

Bimodule Bimodule::from_actions(const Algebra& l, const Algebra& r, std::size_t dim, const std::vector<Mat>& lmats,
                                const std::vector<Mat>& rmats) {
  const Field f = l.field();
  if (lmats.size() != l.dim() || rmats.size() != r.dim())
    throw DimensionMismatch("bimodule: one action matrix per basis element required");
  Mat lact(f, dim, l.dim() * dim), ract(f, dim, dim * r.dim());
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t x = 0; x < dim; ++x) lact.set_col(a * dim + x, lmats[a].col(x));
  for (std::size_t a = 0; a < r.dim(); ++a)
    for (std::size_t x = 0; x < dim; ++x) ract.set_col(x * r.dim() + a, rmats[a].col(x));
  return raw(l, r, dim, lact, ract);
}

Mat left_action_by(const Bimodule& m, const Vec& x) { return combine(m.field(), m.dim(), m.left_actions(), x); }
Mat right_action_by(const Bimodule& m, const Vec& x) { return combine(m.field(), m.dim(), m.right_actions(), x); }

Verdict check_bimodule(const Bimodule& m) {
  const auto& L = m.left_alg();
  const auto& R = m.right_alg();
  Mat id = Mat::identity(m.field(), m.dim());
  auto first_col = [](const Mat& x, const Mat& y) {
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (x.col(c) != y.col(c)) return c;
    return x.cols();
  };
  Mat lu = left_action_by(m, L.unit()), ru = right_action_by(m, R.unit());
  if (lu != id) return Verdict::fail("unital", {0, first_col(lu, id)});
  if (ru != id) return Verdict::fail("unital", {1, first_col(ru, id)});
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = 0; b < R.dim(); ++b) {
      Mat x = m.right_action(b) * m.left_action(a), y = m.left_action(a) * m.right_action(b);
      if (x != y) return Verdict::fail("commuting-actions", {a, first_col(x, y), b});
    }
  for (std::size_t a = 0; a < L.dim(); ++a)
    for (std::size_t b = 0; b < L.dim(); ++b) {
      Mat x = left_action_by(m, L.mult().col(a * L.dim() + b));
      Mat y = m.left_action(a) * m.left_action(b);
      if (x != y) return Verdict::fail("left-assoc", {a, b, first_col(x, y)});
    }
  for (std::size_t a = 0; a < R.dim(); ++a)
    for (std::size_t b = 0; b < R.dim(); ++b) {
      Mat x = right_action_by(m, R.mult().col(a * R.dim() + b));
      Mat y = m.right_action(b) * m.right_action(a);
      if (x != y) return Verdict::fail("right-assoc", {first_col(x, y), a, b});
    }
  return Verdict::pass();
}

Bimodule make_bimodule(const Algebra& l, const Algebra& r, std::size_t dim, const Mat& lact, const Mat& ract) {
  Bimodule m = Bimodule::raw(l, r, dim, lact, ract);
  require(check_bimodule(m), "bimodule");
  return m;
}

Bimodule regular_bimodule(const Algebra& a) { return Bimodule::raw(a, a, a.dim(), a.mult(), a.mult()); }

Bimodule right_module(const Algebra& a, std::size_t dim, const std::vector<Mat>& rmats) {
  Algebra k = ground_algebra(a.field());
  return Bimodule::from_actions(k, a, dim, {Mat::identity(a.field(), dim)}, rmats);
}

Bimodule left_module(const Algebra& a, std::size_t dim, const std::vector<Mat>& lmats) {
  Algebra k = ground_algebra(a.field());
  return Bimodule::from_actions(a, k, dim, lmats, {Mat::identity(a.field(), dim)});
}

Bimodule forget_left(const Bimodule& m) { return right_module(m.right_alg(), m.dim(), m.right_actions()); }

Bimodule restrict_right(const Bimodule& m, const AlgebraMap& f) {
  if (!(f.target == m.right_alg())) throw DimensionMismatch("restrict_right: map target is not the acting algebra");
  std::vector<Mat> r;
  for (std::size_t b = 0; b < f.source.dim(); ++b) r.push_back(right_action_by(m, f.matrix.col(b)));
  return Bimodule::from_actions(m.left_alg(), f.source, m.dim(), m.left_actions(), r);
}

Bimodule restrict_left(const Bimodule& m, const AlgebraMap& f) {
  if (!(f.target == m.left_alg())) throw DimensionMismatch("restrict_left: map target is not the acting algebra");
  std::vector<Mat> l;
  for (std::size_t b = 0; b < f.source.dim(); ++b) l.push_back(left_action_by(m, f.matrix.col(b)));
  return Bimodule::from_actions(f.source, m.right_alg(), m.dim(), l, m.right_actions());
}

// ---------------------------------------------------------------- End

std::optional<Vec> coords_in(const std::vector<Mat>& basis, const Mat& v) {
  if (basis.empty()) {
    if (v.is_zero()) return Vec{};
    return std::nullopt;
  }
  const Field f = v.field();
  std::vector<Vec> rows;
  for (const auto& b : basis) rows.push_back(flatten(b));
  Subspace s(f, v.rows() * v.cols(), Mat::from_rows(f, v.rows() * v.cols(), rows));
  return s.coords(flatten(v));
}

EndomorphismAlgebra left_linear_endomorphisms(const Bimodule& m) {
  const Field f = m.field();
  const std::size_t n = m.dim();
  std::vector<Mat> basis = hom_space(f, n, n, m.left_actions(), m.left_actions());
  const std::size_t d = basis.size();
  Mat mult(f, d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mult.set_col(i * d + j, *coords_in(basis, basis[i] * basis[j]));
  Vec unit = *coords_in(basis, Mat::identity(f, n));
  return {make_algebra(f, d, mult, unit), basis};
}

}  // namespace crg

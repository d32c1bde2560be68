#include "crg/exactla.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace crg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw std::invalid_argument("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return p_ ? "F" + std::to_string(p_) : "Q"; }

Scalar Field::zero() const { return p_ ? Scalar::fp(p_, 0) : Scalar(); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (p_) {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar::fp(p_, r);
  }
  return Scalar::rational(Rational(n));
}

Scalar Field::from_rational(const Rational& q) const {
  if (!p_) return Scalar::rational(q);
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(q) % p_;
  cpp_int den = boost::multiprecision::denominator(q) % p_;
  if (den == 0) throw std::invalid_argument("denominator divisible by the characteristic");
  return from_int(num.convert_to<std::int64_t>()) / from_int(den.convert_to<std::int64_t>());
}

Scalar Field::element(std::uint64_t i) const {
  if (!p_) throw NonFiniteField("enumeration requires a finite field");
  return Scalar::fp(p_, static_cast<std::int64_t>(i % p_));
}

// ---------------------------------------------------------------- Scalar

namespace {

void same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field())
    throw DimensionMismatch("scalars from different fields: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

Scalar Scalar::rational(Rational q) {
  Scalar s;
  if (q != 0) s.q_ = std::make_shared<const Rational>(std::move(q));
  return s;
}

Field Scalar::field() const { return Field(p_); }

bool Scalar::is_one() const { return p_ ? r_ == 1 : (q_ && *q_ == 1); }

Rational Scalar::value() const {
  if (p_) return Rational(r_);
  return q_ ? *q_ : Rational(0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_) {
    // Fermat: r^(p-2)
    std::int64_t result = 1, base = r_, e = p_ - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return fp(p_, result);
  }
  return rational(Rational(1) / *q_);
}

Scalar Scalar::operator-() const {
  if (p_) return fp(p_, r_ ? p_ - r_ : 0);
  return q_ ? rational(-*q_) : Scalar();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) same_field(a, b);
  if (a.p_) {
    std::int64_t r = a.r_ + b.r_;
    if (r >= a.p_) r -= a.p_;
    return Scalar::fp(a.p_, r);
  }
  if (!a.q_) return b;
  if (!b.q_) return a;
  return Scalar::rational(*a.q_ + *b.q_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) same_field(a, b);
  if (a.p_) return Scalar::fp(a.p_, a.r_ * b.r_ % a.p_);
  if (!a.q_ || !b.q_) return Scalar();
  return Scalar::rational(*a.q_ * *b.q_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.p_) return a.r_ == b.r_;
  if (!a.q_ || !b.q_) return !a.q_ && !b.q_;
  return *a.q_ == *b.q_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) same_field(a, b);
  if (a.p_) return a.r_ < b.r_;
  return a.value() < b.value();
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  Rational v = value();
  std::ostringstream os;
  os << boost::multiprecision::numerator(v) << "/" << boost::multiprecision::denominator(v);
  return os.str();
}

Vec zero_vec(Field f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------- Mat

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Mat m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::from_cols(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Mat Mat::column(Field f, const Vec& v) { return from_cols(f, v.size(), {v}); }

Vec Mat::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Mat::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Mat::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::select_cols(std::span<const std::size_t> idx) const {
  Mat m(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
  return m;
}

Mat Mat::select_rows(std::span<const std::size_t> idx) const {
  Mat m(field_, idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
  Vec out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Mat Mat::operator*(const Mat& b) const {
  if (cols_ != b.rows_)
    throw DimensionMismatch("matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                            std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Mat c(field_, rows_, b.cols_);
  if (field_.is_finite()) {
    const std::int64_t p = field_.characteristic();
    std::vector<std::int64_t> acc(b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < cols_; ++k) {
        std::int64_t x = (*this)(i, k).residue();
        if (!x) continue;
        const Scalar* brow = &b.a_[k * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) {
          acc[j] += x * brow[j].residue();
          if (acc[j] >= (std::int64_t{1} << 62)) acc[j] %= p;
        }
      }
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = field_.from_int(acc[j] % p);
    }
    return c;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Mat Mat::operator+(const Mat& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  Mat c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Mat Mat::operator-(const Mat& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  Mat c = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat c = *this;
  for (auto& x : c.a_) x *= s;
  return c;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s)
          if (!b(r, s).is_zero()) k(i * b.rows() + r, j * b.cols() + s) = x * b(r, s);
    }
  return k;
}

Mat hstack(Field f, std::size_t rows, const std::vector<Mat>& blocks) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionMismatch("hstack row mismatch");
    cols += b.cols();
  }
  Mat m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

Mat vstack(Field f, std::size_t cols, const std::vector<Mat>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("vstack column mismatch");
    rows += b.rows();
  }
  Mat m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
    off += b.rows();
  }
  return m;
}

Vec flatten(const Mat& m) { return m.entries(); }

Mat reshape(Field f, const Vec& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("reshape size mismatch");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

bool lex_less(const Mat& a, const Mat& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                      b.entries().end());
}

// ---------------------------------------------------------------- elimination

namespace {

Echelon rref_fp(const Mat& m) {
  const std::int64_t p = m.field().characteristic();
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::int64_t> a(R * C);
  for (std::size_t i = 0; i < R * C; ++i) a[i] = m.entries()[i].residue();
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t piv = row;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[row * C + j]);
    std::int64_t s = inv(a[row * C + c]);
    for (std::size_t j = c; j < C; ++j) a[row * C + j] = a[row * C + j] * s % p;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row) continue;
      std::int64_t f = a[i * C + c];
      if (!f) continue;
      for (std::size_t j = c; j < C; ++j) {
        a[i * C + j] = (a[i * C + j] - f * a[row * C + j]) % p;
        if (a[i * C + j] < 0) a[i * C + j] += p;
      }
    }
    pivots.push_back(c);
    ++row;
  }
  Echelon e{Mat(m.field(), row, C), pivots};
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < C; ++j) e.basis(i, j) = m.field().from_int(a[i * C + j]);
  return e;
}

Echelon rref_generic(const Mat& m) {
  Mat a = m;
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < C && row < R; ++c) {
    std::size_t piv = row;
    while (piv < R && a(piv, c).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != row)
      for (std::size_t j = 0; j < C; ++j) std::swap(a(piv, j), a(row, j));
    Scalar s = a(row, c).inverse();
    for (std::size_t j = c; j < C; ++j) a(row, j) *= s;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::size_t> keep(row);
  for (std::size_t i = 0; i < row; ++i) keep[i] = i;
  return Echelon{a.select_rows(keep), pivots};
}

}  // namespace

Echelon rref(const Mat& m) { return m.field().is_finite() ? rref_fp(m) : rref_generic(m); }

std::size_t rank(const Mat& m) { return rref(m).rank(); }

Mat kernel(const Mat& m) {
  const Field f = m.field();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec v = unit_vec(f, m.cols(), fc);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.basis(i, fc);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Mat(f, 0, m.cols());
  return rref(Mat::from_rows(f, m.cols(), basis)).basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& target) {
  if (target.size() != m.rows()) throw DimensionMismatch("solve: target length mismatch");
  auto x = solve(m, Mat::column(m.field(), target));
  if (!x) return std::nullopt;
  return x->col(0);
}

std::optional<Mat> solve(const Mat& m, const Mat& targets) {
  if (targets.rows() != m.rows()) throw DimensionMismatch("solve: target rows mismatch");
  const Field f = m.field();
  Mat aug = hstack(f, m.rows(), {m, targets});
  Echelon e = rref(aug);
  Mat x(f, m.cols(), targets.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= m.cols()) return std::nullopt;
    for (std::size_t t = 0; t < targets.cols(); ++t) x(e.pivots[i], t) = e.basis(i, m.cols() + t);
  }
  return x;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field f, std::size_t ambient, const Mat& spanning_rows)
    : field_(f), ambient_(ambient), ech_{Mat(f, 0, ambient), {}} {
  if (spanning_rows.cols() != ambient) throw DimensionMismatch("subspace: spanning rows have wrong length");
  if (spanning_rows.rows() > 0) ech_ = rref(spanning_rows);
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("subspace: vector length mismatch");
  Vec c(dim(), field_.zero());
  Vec rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    c[i] = rest[ech_.pivots[i]];
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!ech_.basis(i, j).is_zero()) rest[j] -= c[i] * ech_.basis(i, j);
  }
  if (!is_zero(rest)) return std::nullopt;
  return c;
}

bool Subspace::contains(const Vec& v) const { return coords(v).has_value(); }

// ---------------------------------------------------------------- quotients

QuotientSpace quotient(Field f, std::size_t ambient_dim, const Mat& relations) {
  if (relations.cols() != ambient_dim)
    throw DimensionMismatch("quotient: relations have " + std::to_string(relations.cols()) +
                            " columns, ambient is " + std::to_string(ambient_dim));
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  Echelon e = relations.rows() ? rref(relations) : Echelon{Mat(f, 0, ambient_dim), {}};
  q.relations = e.basis;
  q.relation_pivots = e.pivots;
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> slot(ambient_dim, 0);
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) {
      slot[j] = q.free_cols.size();
      q.free_cols.push_back(j);
    }
  q.quo_dim = q.free_cols.size();
  q.projection = Mat(f, q.quo_dim, ambient_dim);
  q.section = Mat(f, ambient_dim, q.quo_dim);
  for (std::size_t k = 0; k < q.quo_dim; ++k) {
    q.projection(k, q.free_cols[k]) = f.one();
    q.section(q.free_cols[k], k) = f.one();
  }
  // e_pivot = relation_i - sum_free R[i][fc] e_fc, so modulo relations it
  // equals -sum_free R[i][fc] e_fc.
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    for (std::size_t fc : q.free_cols)
      if (!e.basis(i, fc).is_zero()) q.projection(slot[fc], e.pivots[i]) = -e.basis(i, fc);
  return q;
}

std::optional<Mat> descends(const Mat& m, const QuotientSpace& q) {
  if (m.cols() != q.ambient_dim) throw DimensionMismatch("descends: map domain does not match quotient ambient");
  if (q.relations.rows() && !(m * q.relations.transpose()).is_zero()) return std::nullopt;
  return m * q.section;
}

// ---------------------------------------------------------------- hom spaces

std::vector<Mat> hom_space(Field f, std::size_t dim_v, std::size_t dim_w, const std::vector<Mat>& src,
                           const std::vector<Mat>& dst) {
  if (src.size() != dst.size()) throw DimensionMismatch("hom_space: operator lists differ in length");
  // Row-major vec: vec(X S) = (I_w (x) S^T) vec(X), vec(T X) = (T (x) I_v) vec(X).
  std::vector<Mat> blocks;
  const std::size_t n = dim_v * dim_w;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i].rows() != dim_v || src[i].cols() != dim_v || dst[i].rows() != dim_w || dst[i].cols() != dim_w)
      throw DimensionMismatch("hom_space: operator shape mismatch");
    blocks.push_back(kron(Mat::identity(f, dim_w), src[i].transpose()) - kron(dst[i], Mat::identity(f, dim_v)));
  }
  Mat constraints = blocks.empty() ? Mat(f, 0, n) : vstack(f, n, blocks);
  Mat ker = kernel(constraints);
  std::vector<Mat> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) out.push_back(reshape(f, ker.row(r), dim_w, dim_v));
  return out;
}

// ---------------------------------------------------------------- limits

namespace {
Limits g_limits;
}

const Limits& limits() { return g_limits; }
void set_limits(const Limits& l) { g_limits = l; }

void check_dim(std::size_t dim, const char* what) {
  if (dim > g_limits.max_dim)
    throw SizeLimit(std::string(what) + ": dimension " + std::to_string(dim) + " exceeds limit " +
                    std::to_string(g_limits.max_dim));
}

}  // namespace crg

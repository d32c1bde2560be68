#pragma once

// Exact dense linear algebra over F_p and Q.
//
// Matrices act on column vectors: a linear map V -> W is a (dim W) x (dim V)
// matrix. Tensor products of spaces use row-major index pairing
// (i, j) -> i * dim(N) + j, so the matrix of f (x) g is kron(f, g).

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crg/errors.hpp"

namespace crg {

using Rational = boost::multiprecision::cpp_rational;

class Scalar;

bool is_prime(std::uint64_t n);

/// Base field: a prime field F_p (p < 2^31) or the rationals.
class Field {
 public:
  Field() = default;  // the rationals
  static Field prime(std::uint64_t p);
  static Field rationals() { return Field(); }

  bool is_finite() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  Scalar from_rational(const Rational& q) const;
  /// The i-th element in canonical order 0 < 1 < ... < p-1 (finite fields only).
  Scalar element(std::uint64_t i) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() = default;  // rational zero

  Field field() const;
  bool is_zero() const { return p_ ? r_ == 0 : !q_; }
  bool is_one() const;

  /// Residue in [0, p) for prime-field elements.
  std::int64_t residue() const { return r_; }
  Rational value() const;

  Scalar inverse() const;
  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Canonical order: residues for F_p, numeric value for Q.
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// Canonical printing: "0".."p-1" for F_p, "num/den" in lowest terms for Q.
  std::string str() const;

 private:
  friend class Field;
  static Scalar fp(std::uint32_t p, std::int64_t r) {
    Scalar s;
    s.p_ = p;
    s.r_ = r;
    return s;
  }
  static Scalar rational(Rational q);

  std::uint32_t p_ = 0;
  std::int64_t r_ = 0;
  std::shared_ptr<const Rational> q_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  static Mat zeros(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
  static Mat from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows);
  static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_cols(Field f, std::size_t rows, const std::vector<Vec>& cols);
  static Mat column(Field f, const Vec& v);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);
  /// Entries in row-major order.
  const std::vector<Scalar>& entries() const { return a_; }

  Mat transpose() const;
  Mat select_cols(std::span<const std::size_t> idx) const;
  Mat select_rows(std::span<const std::size_t> idx) const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  Mat operator*(const Mat& b) const;
  Mat operator+(const Mat& b) const;
  Mat operator-(const Mat& b) const;
  Mat scaled(const Scalar& s) const;

  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Mat kron(const Mat& a, const Mat& b);
Mat hstack(Field f, std::size_t rows, const std::vector<Mat>& blocks);
Mat vstack(Field f, std::size_t cols, const std::vector<Mat>& blocks);

/// Row-major flattening of a matrix and its inverse.
Vec flatten(const Mat& m);
Mat reshape(Field f, const Vec& v, std::size_t rows, std::size_t cols);

/// Lexicographic comparison on row-major entries with the canonical scalar order.
bool lex_less(const Mat& a, const Mat& b);

/// Nonzero rows of the reduced row echelon form, with the pivot column of
/// each row. Pivots are chosen at the lowest column index, so the result only
/// depends on the row space of the input.
struct Echelon {
  Mat basis;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Rows form a basis of the null space {v : m v = 0}, in reduced echelon form.
Mat kernel(const Mat& m);

/// Some x with m x = target (free variables 0), or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& target);
/// Column-wise solve of m X = targets.
std::optional<Mat> solve(const Mat& m, const Mat& targets);

/// A subspace of k^n held as an echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Field f, std::size_t ambient, const Mat& spanning_rows);

  std::size_t dim() const { return ech_.rank(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Mat& basis() const { return ech_.basis; }
  const std::vector<std::size_t>& pivots() const { return ech_.pivots; }
  bool contains(const Vec& v) const;
  /// Coordinates with respect to basis(), or nullopt when v is outside.
  std::optional<Vec> coords(const Vec& v) const;

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Echelon ech_;
};

/// k^ambient modulo the row space of `relations`, with canonical projection
/// (quo_dim x ambient) and section (ambient x quo_dim).
///
/// The quotient basis is indexed by the non-pivot columns of the echelonized
/// relations; the section sends each quotient basis vector to its column.
struct QuotientSpace {
  std::size_t ambient_dim = 0;
  Mat relations;  // echelon basis of the killed subspace
  std::vector<std::size_t> relation_pivots;
  std::vector<std::size_t> free_cols;
  std::size_t quo_dim = 0;
  Mat projection;
  Mat section;
};

QuotientSpace quotient(Field f, std::size_t ambient_dim, const Mat& relations);

/// The map induced on q by m (m.cols == q.ambient_dim), when m kills every
/// relation.
std::optional<Mat> descends(const Mat& m, const QuotientSpace& q);

/// Basis of {X : V -> W | X * src[i] == dst[i] * X for all i}, as matrices.
std::vector<Mat> hom_space(Field f, std::size_t dim_v, std::size_t dim_w,
                           const std::vector<Mat>& src, const std::vector<Mat>& dst);

/// Size guards. Process-wide; set once by the CLI before any work.
struct Limits {
  std::size_t max_dim = 4096;
  std::uint64_t max_enum = 2'000'000;
};
const Limits& limits();
void set_limits(const Limits& l);
void check_dim(std::size_t dim, const char* what);

}  // namespace crg

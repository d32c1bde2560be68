#pragma once

// Tensor products over k and over algebras, realised as quotients of the
// k-tensor ambient space by the balancing relations.

#include <cstddef>
#include <optional>
#include <vector>

#include "crg/algmod.hpp"

namespace crg {

/// Row-major pairing (i, j) -> i * dim_n + j of basis indices of M (x)_k N.
inline std::size_t tensor_k(std::size_t dim_n, std::size_t i, std::size_t j) { return i * dim_n + j; }

/// M_1 (x) M_2 (x) ... (x) M_n where each junction is either over k or
/// balanced over the algebra acting on both sides of it (the right algebra of
/// the left factor, which must equal the left algebra of the right factor).
///
/// The ambient space is the k-tensor product of the factors; q kills the
/// span of (m.a) (x) n - m (x) (a.n) at every balanced junction at once.
class TensorChain {
 public:
  TensorChain() = default;
  TensorChain(std::vector<Bimodule> factors, std::vector<bool> balanced);

  const std::vector<Bimodule>& factors() const { return factors_; }
  const std::vector<bool>& balanced() const { return balanced_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t ambient_dim() const { return q_.ambient_dim; }
  std::size_t dim() const { return q_.quo_dim; }
  const QuotientSpace& quotient() const { return q_; }
  const Mat& proj() const { return q_.projection; }
  const Mat& sect() const { return q_.section; }

  /// Left action of the first factor's left algebra and right action of the
  /// last factor's right algebra, both on the quotient.
  Bimodule outer_bimodule() const;

 private:
  std::vector<Bimodule> factors_;
  std::vector<bool> balanced_;
  std::vector<std::size_t> dims_;
  QuotientSpace q_;
};

/// M (x)_A N for M with right algebra A and N with left algebra A.
TensorChain tensor_over(const Bimodule& m, const Bimodule& n);

/// All factors balanced at every junction.
TensorChain tensor_chain(const std::vector<Bimodule>& factors);

/// The balancing relations of M (x)_A N as rows of a matrix (unreduced span).
Mat balancing_relations(const Bimodule& m, const Bimodule& n);

/// M (x)_A N as a bimodule over the outer algebras.
Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n);

/// The map between quotients induced by f on the ambient spaces, when f sends
/// every relation of src into the relations of dst.
std::optional<Mat> induced_map(const Mat& f, const TensorChain& src, const TensorChain& dst);

/// Isomorphisms from (M (x)_A N) (x)_A P and M (x)_A (N (x)_A P) onto the
/// single-step quotient of M (x) N (x) P.
struct AssocNormalizer {
  TensorChain left_nested;   // (M (x) N) (x) P, first factor being the quotient bimodule
  TensorChain right_nested;  // M (x) (N (x) P)
  TensorChain flat;          // M (x) N (x) P
  Mat from_left;             // flat.dim x left_nested.dim
  Mat from_right;            // flat.dim x right_nested.dim
};
AssocNormalizer assoc_normalizer(const Bimodule& m, const Bimodule& n, const Bimodule& p);

/// Block-diagonal direct sum of bimodules over the same algebras.
Bimodule direct_sum(const Bimodule& m, const Bimodule& n);

/// First column index where two equally shaped matrices differ, or nullopt.
std::optional<std::size_t> first_diff_col(const Mat& x, const Mat& y);

}  // namespace crg

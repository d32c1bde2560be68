#include "crg/tensorcat.hpp"

namespace crg {

namespace {

std::size_t product_of(const std::vector<std::size_t>& d, std::size_t from, std::size_t to) {
  std::size_t p = 1;
  for (std::size_t i = from; i < to; ++i) p *= d[i];
  return p;
}

// Echelon basis of span{(m.a) (x) n - m (x) (a.n)} inside M (x)_k N.
Mat local_relations(const Bimodule& m, const Bimodule& n) {
  const Field f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  std::vector<Mat> blocks;
  for (std::size_t a = 0; a < m.right_alg().dim(); ++a) {
    Mat k = kron(m.right_action(a), Mat::identity(f, dn)) - kron(Mat::identity(f, dm), n.left_action(a));
    blocks.push_back(k.transpose());
  }
  Mat all = vstack(f, dm * dn, blocks);
  if (all.rows() == 0) return all;
  return rref(all).basis;
}

}  // namespace

TensorChain::TensorChain(std::vector<Bimodule> factors, std::vector<bool> balanced)
    : factors_(std::move(factors)), balanced_(std::move(balanced)) {
  if (factors_.empty()) throw DimensionMismatch("tensor chain: no factors");
  if (balanced_.size() + 1 != factors_.size()) throw DimensionMismatch("tensor chain: one flag per junction required");
  const Field f = factors_[0].field();
  for (const auto& m : factors_) dims_.push_back(m.dim());
  const std::size_t n = product_of(dims_, 0, dims_.size());
  check_dim(n, "tensor product ambient");

  std::vector<Mat> blocks;
  for (std::size_t j = 0; j + 1 < factors_.size(); ++j) {
    if (!balanced_[j]) continue;
    if (!(factors_[j].right_alg() == factors_[j + 1].left_alg()))
      throw DimensionMismatch("tensor chain: algebras at junction " + std::to_string(j) + " differ");
    Mat loc = local_relations(factors_[j], factors_[j + 1]);
    if (loc.rows() == 0) continue;
    const std::size_t pre = product_of(dims_, 0, j), post = product_of(dims_, j + 2, dims_.size());
    blocks.push_back(kron(Mat::identity(f, pre), kron(loc, Mat::identity(f, post))));
  }
  q_ = crg::quotient(f, n, vstack(f, n, blocks));
}

Bimodule TensorChain::outer_bimodule() const {
  const Field f = factors_[0].field();
  const Bimodule& first = factors_.front();
  const Bimodule& last = factors_.back();
  const std::size_t n = ambient_dim();
  std::vector<Mat> l, r;
  for (std::size_t a = 0; a < first.left_alg().dim(); ++a)
    l.push_back(proj() * kron(first.left_action(a), Mat::identity(f, n / first.dim())) * sect());
  for (std::size_t a = 0; a < last.right_alg().dim(); ++a)
    r.push_back(proj() * kron(Mat::identity(f, n / last.dim()), last.right_action(a)) * sect());
  return Bimodule::from_actions(first.left_alg(), last.right_alg(), dim(), l, r);
}

TensorChain tensor_over(const Bimodule& m, const Bimodule& n) { return TensorChain({m, n}, {true}); }

TensorChain tensor_chain(const std::vector<Bimodule>& factors) {
  return TensorChain(factors, std::vector<bool>(factors.empty() ? 0 : factors.size() - 1, true));
}

Mat balancing_relations(const Bimodule& m, const Bimodule& n) {
  if (!(m.right_alg() == n.left_alg())) throw DimensionMismatch("balancing_relations: algebras differ");
  const Field f = m.field();
  std::vector<Mat> blocks;
  for (std::size_t a = 0; a < m.right_alg().dim(); ++a)
    blocks.push_back(
        (kron(m.right_action(a), Mat::identity(f, n.dim())) - kron(Mat::identity(f, m.dim()), n.left_action(a)))
            .transpose());
  return vstack(f, m.dim() * n.dim(), blocks);
}

Bimodule tensor_bimodule(const Bimodule& m, const Bimodule& n) { return tensor_over(m, n).outer_bimodule(); }

std::optional<Mat> induced_map(const Mat& f, const TensorChain& src, const TensorChain& dst) {
  if (f.cols() != src.ambient_dim() || f.rows() != dst.ambient_dim())
    throw DimensionMismatch("induced_map: map does not fit the ambient spaces");
  Mat g = dst.proj() * f;
  auto d = descends(g, src.quotient());
  return d;
}

AssocNormalizer assoc_normalizer(const Bimodule& m, const Bimodule& n, const Bimodule& p) {
  const Field f = m.field();
  TensorChain mn = tensor_over(m, n), np = tensor_over(n, p);
  AssocNormalizer r;
  r.left_nested = tensor_over(mn.outer_bimodule(), p);
  r.right_nested = tensor_over(m, np.outer_bimodule());
  r.flat = tensor_chain({m, n, p});
  r.from_left = r.flat.proj() * kron(mn.sect(), Mat::identity(f, p.dim())) * r.left_nested.sect();
  r.from_right = r.flat.proj() * kron(Mat::identity(f, m.dim()), np.sect()) * r.right_nested.sect();
  return r;
}

Bimodule direct_sum(const Bimodule& m, const Bimodule& n) {
  if (!(m.left_alg() == n.left_alg()) || !(m.right_alg() == n.right_alg()))
    throw DimensionMismatch("direct_sum: bimodules over different algebras");
  const Field f = m.field();
  const std::size_t d = m.dim() + n.dim();
  auto block = [&](const Mat& x, const Mat& y) {
    Mat z(f, d, d);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) z(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) z(m.dim() + i, m.dim() + j) = y(i, j);
    return z;
  };
  std::vector<Mat> l, r;
  for (std::size_t a = 0; a < m.left_alg().dim(); ++a) l.push_back(block(m.left_action(a), n.left_action(a)));
  for (std::size_t a = 0; a < m.right_alg().dim(); ++a) r.push_back(block(m.right_action(a), n.right_action(a)));
  return Bimodule::from_actions(m.left_alg(), m.right_alg(), d, l, r);
}

std::optional<std::size_t> first_diff_col(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw DimensionMismatch("compare: shapes differ");
  if (x == y) return std::nullopt;
  for (std::size_t c = 0; c < x.cols(); ++c)
    for (std::size_t r = 0; r < x.rows(); ++r)
      if (!(x(r, c) == y(r, c))) return c;
  return std::nullopt;
}

}  // namespace crg

#include "workbench/algebra.hpp"

#include <cmath>
#include <sstream>

namespace workbench {

namespace {

void accumulate(Vec& out, const SparseVec& s, Complex c) {
  for (const auto& e : s) out[e.index] += c * e.value;
}

SparseVec sparsify(const Vec& v) {
  SparseVec s;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != Complex(0.0)) s.push_back({static_cast<std::uint32_t>(i), v[i]});
  return s;
}

Vec densify(const SparseVec& s, std::size_t n) {
  Vec v = Vec::Zero(static_cast<Eigen::Index>(n));
  accumulate(v, s, 1.0);
  return v;
}

}  // namespace

StarAlgebra::StarAlgebra(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw InputError("algebra dimension must be positive");
}

Vec StarAlgebra::basis(std::size_t i) const {
  if (i >= dim_) throw InputError("basis index out of range");
  Vec v = zero();
  v[static_cast<Eigen::Index>(i)] = 1.0;
  return v;
}

void StarAlgebra::build_cache() const {
  std::call_once(cache_once_, [this] {
    products_.resize(dim_ * dim_);
    adjoints_.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec ei = basis(i);
      adjoints_[i] = sparsify(involution(ei));
      for (std::size_t j = 0; j < dim_; ++j) products_[i * dim_ + j] = sparsify(product(ei, basis(j)));
    }
  });
}

const SparseVec& StarAlgebra::basis_product(std::size_t i, std::size_t j) const {
  build_cache();
  return products_[i * dim_ + j];
}

const SparseVec& StarAlgebra::basis_adjoint(std::size_t i) const {
  build_cache();
  return adjoints_[i];
}

Vec StarAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (static_cast<std::size_t>(a.size()) != dim_ || static_cast<std::size_t>(b.size()) != dim_)
    throw InputError("multiply: operand dimension mismatch");
  if (dim_ > kStructureCacheLimit) return product(a, b);
  build_cache();
  Vec out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == Complex(0.0)) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == Complex(0.0)) continue;
      accumulate(out, products_[i * dim_ + j], a[i] * b[j]);
    }
  }
  return out;
}

Vec StarAlgebra::adjoint(const Vec& a) const {
  if (static_cast<std::size_t>(a.size()) != dim_) throw InputError("adjoint: dimension mismatch");
  if (dim_ > kStructureCacheLimit) return involution(a);
  build_cache();
  Vec out = zero();
  for (std::size_t i = 0; i < dim_; ++i)
    if (a[i] != Complex(0.0)) accumulate(out, adjoints_[i], std::conj(a[i]));
  return out;
}

void StarAlgebra::set_materialization(std::vector<Mat> images) {
  if (images.size() != dim_) throw InputError("materialization needs one image per basis element");
  rep_dim_ = static_cast<std::size_t>(images.front().rows());
  for (const auto& m : images)
    if (static_cast<std::size_t>(m.rows()) != rep_dim_ || m.rows() != m.cols())
      throw InputError("materialization images must be square of equal size");
  rep_ = std::move(images);
}

Mat StarAlgebra::represent(const Vec& a) const {
  const auto d = static_cast<Eigen::Index>(rep_dim_);
  Mat m = Mat::Zero(d, d);
  for (std::size_t i = 0; i < dim_; ++i)
    if (a[i] != Complex(0.0)) m += a[i] * rep_[i];
  return m;
}

std::size_t StarAlgebra::rep_rank(double tol) const {
  const auto d2 = static_cast<Eigen::Index>(rep_dim_ * rep_dim_);
  Mat stacked(d2, static_cast<Eigen::Index>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    stacked.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vec>(rep_[i].data(), d2);
  Eigen::BDCSVD<Mat> svd(stacked);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

// ---------------------------------------------------------------------------

MatrixDirectSum::MatrixDirectSum(std::vector<std::size_t> block_dims)
    : StarAlgebra([&] {
        std::size_t n = 0;
        for (auto d : block_dims) {
          if (d == 0) throw InputError("block dimensions must be positive");
          n += d * d;
        }
        return n;
      }()),
      dims_(std::move(block_dims)) {
  std::size_t off = 0, total = 0;
  for (auto d : dims_) {
    offsets_.push_back(off);
    off += d * d;
    total += d;
  }
  std::vector<Mat> images;
  images.reserve(dim());
  std::size_t diag = 0;
  for (auto d : dims_) {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        Mat m = Mat::Zero(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
        m(static_cast<Eigen::Index>(diag + r), static_cast<Eigen::Index>(diag + c)) = 1.0;
        images.push_back(std::move(m));
      }
    diag += d;
  }
  set_materialization(std::move(images));
}

Mat MatrixDirectSum::block(const Vec& a, std::size_t k) const {
  const auto d = static_cast<Eigen::Index>(dims_[k]);
  Mat m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = a[static_cast<Eigen::Index>(offsets_[k]) + r * d + c];
  return m;
}

std::vector<Mat> MatrixDirectSum::to_blocks(const Vec& a) const {
  std::vector<Mat> out;
  for (std::size_t k = 0; k < dims_.size(); ++k) out.push_back(block(a, k));
  return out;
}

Vec MatrixDirectSum::from_blocks(const std::vector<Mat>& blocks) const {
  if (blocks.size() != dims_.size()) throw InputError("from_blocks: wrong number of blocks");
  Vec v = zero();
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    const auto d = static_cast<Eigen::Index>(dims_[k]);
    if (blocks[k].rows() != d || blocks[k].cols() != d) throw InputError("from_blocks: block has wrong size");
    for (Eigen::Index r = 0; r < d; ++r)
      for (Eigen::Index c = 0; c < d; ++c) v[static_cast<Eigen::Index>(offsets_[k]) + r * d + c] = blocks[k](r, c);
  }
  return v;
}

Vec MatrixDirectSum::from_matrix(const Mat& m) const {
  const auto total = static_cast<Eigen::Index>(rep_dim());
  if (m.rows() != total || m.cols() != total) throw InputError("from_matrix: wrong size");
  std::vector<Mat> blocks;
  Eigen::Index diag = 0;
  for (auto d : dims_) {
    const auto dd = static_cast<Eigen::Index>(d);
    blocks.push_back(m.block(diag, diag, dd, dd));
    diag += dd;
  }
  Vec v = from_blocks(blocks);
  if (residual(represent(v), m) > 0.0) throw InputError("from_matrix: matrix is not block diagonal");
  return v;
}

Vec MatrixDirectSum::unit() const {
  std::vector<Mat> blocks;
  for (auto d : dims_) blocks.push_back(Mat::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
  return from_blocks(blocks);
}

std::string MatrixDirectSum::describe() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < dims_.size(); ++k) os << (k ? " + " : "") << "M" << dims_[k];
  return os.str();
}

Vec MatrixDirectSum::product(const Vec& a, const Vec& b) const {
  std::vector<Mat> out;
  for (std::size_t k = 0; k < dims_.size(); ++k) out.push_back(block(a, k) * block(b, k));
  return from_blocks(out);
}

Vec MatrixDirectSum::involution(const Vec& a) const {
  std::vector<Mat> out;
  for (std::size_t k = 0; k < dims_.size(); ++k) out.push_back(block(a, k).adjoint());
  return from_blocks(out);
}

std::shared_ptr<const MatrixDirectSum> matrix_algebra(std::size_t n) {
  return std::make_shared<MatrixDirectSum>(std::vector<std::size_t>{n});
}

std::shared_ptr<const MatrixDirectSum> direct_sum(std::vector<std::size_t> block_dims) {
  return std::make_shared<MatrixDirectSum>(std::move(block_dims));
}

// ---------------------------------------------------------------------------

TensorProduct::TensorProduct(AlgebraPtr left, AlgebraPtr right)
    : StarAlgebra(left->dim() * right->dim()), left_(std::move(left)), right_(std::move(right)) {
  std::vector<Mat> images;
  images.reserve(dim());
  for (std::size_t i = 0; i < left_->dim(); ++i)
    for (std::size_t j = 0; j < right_->dim(); ++j)
      images.push_back(kron(left_->rep_basis()[i], right_->rep_basis()[j]));
  set_materialization(std::move(images));
}

Vec TensorProduct::elementary(const Vec& a, const Vec& b) const {
  Vec v = zero();
  for (std::size_t i = 0; i < left_->dim(); ++i)
    for (std::size_t j = 0; j < right_->dim(); ++j) v[static_cast<Eigen::Index>(index(i, j))] = a[i] * b[j];
  return v;
}

Vec TensorProduct::unit() const { return elementary(left_->unit(), right_->unit()); }

std::string TensorProduct::describe() const {
  return "(" + left_->describe() + ") (x) (" + right_->describe() + ")";
}

Vec TensorProduct::product(const Vec& a, const Vec& b) const {
  const std::size_t nl = left_->dim(), nr = right_->dim();
  Vec out = zero();
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      const Complex ca = a[static_cast<Eigen::Index>(index(i, j))];
      if (ca == Complex(0.0)) continue;
      for (std::size_t k = 0; k < nl; ++k)
        for (std::size_t l = 0; l < nr; ++l) {
          const Complex cb = b[static_cast<Eigen::Index>(index(k, l))];
          if (cb == Complex(0.0)) continue;
          for (const auto& p : left_->basis_product(i, k))
            for (const auto& q : right_->basis_product(j, l))
              out[static_cast<Eigen::Index>(index(p.index, q.index))] += ca * cb * p.value * q.value;
        }
    }
  return out;
}

Vec TensorProduct::involution(const Vec& a) const {
  Vec out = zero();
  for (std::size_t i = 0; i < left_->dim(); ++i)
    for (std::size_t j = 0; j < right_->dim(); ++j) {
      const Complex c = std::conj(a[static_cast<Eigen::Index>(index(i, j))]);
      if (c == Complex(0.0)) continue;
      for (const auto& p : left_->basis_adjoint(i))
        for (const auto& q : right_->basis_adjoint(j))
          out[static_cast<Eigen::Index>(index(p.index, q.index))] += c * p.value * q.value;
    }
  return out;
}

AlgebraPtr tensor(AlgebraPtr a, AlgebraPtr b) { return std::make_shared<TensorProduct>(std::move(a), std::move(b)); }

// ---------------------------------------------------------------------------

double unitary_residual(const StarAlgebra& alg, const Vec& u) {
  const Vec one = alg.unit(), us = alg.adjoint(u);
  return std::max(alg.norm(alg.multiply(us, u) - one), alg.norm(alg.multiply(u, us) - one));
}

Report verify_star_algebra(const StarAlgebra& alg, double tol) {
  Report r;
  const std::size_t n = alg.dim();
  const Vec one = alg.unit();

  r.add(sweep("algebra.associativity", "(e_i e_j) e_k = e_i (e_j e_k)", {n, n, n}, tol, [&](auto t) {
    Vec lhs = alg.zero(), rhs = alg.zero();
    for (const auto& p : alg.basis_product(t[0], t[1])) accumulate(lhs, alg.basis_product(p.index, t[2]), p.value);
    for (const auto& p : alg.basis_product(t[1], t[2])) accumulate(rhs, alg.basis_product(t[0], p.index), p.value);
    return residual(lhs, rhs);
  }));
  r.add(sweep("algebra.adjoint_antimultiplicative", "(e_i e_j)* = e_j* e_i*", {n, n}, tol, [&](auto t) {
    Vec ab = densify(alg.basis_product(t[0], t[1]), n);
    return residual(alg.adjoint(ab), alg.multiply(alg.adjoint(alg.basis(t[1])), alg.adjoint(alg.basis(t[0]))));
  }));
  r.add(sweep("algebra.adjoint_involutive", "e_i** = e_i", {n}, tol, [&](auto t) {
    return residual(alg.adjoint(alg.adjoint(alg.basis(t[0]))), alg.basis(t[0]));
  }));
  r.add(sweep("algebra.unit", "1 e_i = e_i = e_i 1", {n}, tol, [&](auto t) {
    Vec ei = alg.basis(t[0]);
    return std::max(residual(alg.multiply(one, ei), ei), residual(alg.multiply(ei, one), ei));
  }));

  const auto& rep = alg.rep_basis();
  r.add(sweep("algebra.materialization_multiplicative", "R(e_i e_j) = R(e_i) R(e_j)", {n, n}, tol, [&](auto t) {
    return residual(alg.represent(densify(alg.basis_product(t[0], t[1]), n)), Mat(rep[t[0]] * rep[t[1]]));
  }));
  r.add(sweep("algebra.materialization_adjoint", "R(e_i*) = R(e_i)*", {n}, tol, [&](auto t) {
    return residual(alg.represent(alg.adjoint(alg.basis(t[0]))), Mat(rep[t[0]].adjoint()));
  }));
  const auto d = static_cast<Eigen::Index>(alg.rep_dim());
  r.add(single("algebra.materialization_unit", "R(1) = I", residual(alg.represent(one), Mat(Mat::Identity(d, d))), tol));
  r.add(single("algebra.materialization_faithful", "rank R = dim A",
               static_cast<double>(n - std::min(n, alg.rep_rank())), 0.5));
  return r;
}

Mat matrix_of(const StarAlgebra& source, std::size_t target_dim, const std::function<Vec(const Vec&)>& f) {
  Mat m(static_cast<Eigen::Index>(target_dim), static_cast<Eigen::Index>(source.dim()));
  for (std::size_t i = 0; i < source.dim(); ++i) {
    Vec v = f(source.basis(i));
    if (static_cast<std::size_t>(v.size()) != target_dim) throw InputError("matrix_of: image has wrong dimension");
    m.col(static_cast<Eigen::Index>(i)) = v;
  }
  return m;
}

// ---------------------------------------------------------------------------

StarAutomorphism StarAutomorphism::identity(AlgebraPtr carrier) {
  const auto n = static_cast<Eigen::Index>(carrier->dim());
  StarAutomorphism a(carrier, Mat::Identity(n, n), Mat::Identity(n, n));
  if (auto mds = std::dynamic_pointer_cast<const MatrixDirectSum>(carrier)) {
    BlockStructure s;
    for (std::size_t k = 0; k < mds->block_count(); ++k) {
      s.sigma.push_back(k);
      const auto d = static_cast<Eigen::Index>(mds->block_dims()[k]);
      s.unitaries.push_back(Mat::Identity(d, d));
    }
    a.structure_ = std::move(s);
  }
  return a;
}

StarAutomorphism StarAutomorphism::from_matrix(AlgebraPtr carrier, Mat m) {
  const auto n = static_cast<Eigen::Index>(carrier->dim());
  if (m.rows() != n || m.cols() != n) throw InputError("automorphism matrix has wrong shape");
  Eigen::FullPivLU<Mat> lu(m);
  if (!lu.isInvertible()) throw InputError("automorphism matrix is singular");
  Mat inv = lu.inverse();
  return StarAutomorphism(std::move(carrier), std::move(m), std::move(inv));
}

StarAutomorphism StarAutomorphism::from_map(AlgebraPtr carrier, const std::function<Vec(const Vec&)>& f) {
  Mat m = matrix_of(*carrier, carrier->dim(), f);
  return from_matrix(std::move(carrier), std::move(m));
}

namespace {

Vec apply_structure(const MatrixDirectSum& alg, const BlockStructure& s, const Vec& a) {
  std::vector<Mat> in = alg.to_blocks(a), out(in.size());
  for (std::size_t k = 0; k < in.size(); ++k) out[s.sigma[k]] = in[k];
  for (std::size_t k = 0; k < in.size(); ++k) out[k] = s.unitaries[k] * out[k] * s.unitaries[k].adjoint();
  return alg.from_blocks(out);
}

}  // namespace

StarAutomorphism StarAutomorphism::structured(std::shared_ptr<const MatrixDirectSum> carrier, BlockStructure s) {
  const std::size_t m = carrier->block_count();
  if (s.sigma.size() != m || s.unitaries.size() != m) throw InputError("structured automorphism: wrong block count");
  std::vector<bool> seen(m, false);
  for (std::size_t k = 0; k < m; ++k) {
    if (s.sigma[k] >= m || seen[s.sigma[k]]) throw InputError("structured automorphism: sigma is not a permutation");
    seen[s.sigma[k]] = true;
    if (carrier->block_dims()[s.sigma[k]] != carrier->block_dims()[k])
      throw InputError("structured automorphism: permuted blocks differ in size");
    const auto d = static_cast<Eigen::Index>(carrier->block_dims()[k]);
    if (s.unitaries[k].rows() != d || s.unitaries[k].cols() != d)
      throw InputError("structured automorphism: unitary has wrong size");
    if (residual(Mat(s.unitaries[k].adjoint() * s.unitaries[k]), Mat(Mat::Identity(d, d))) > 1e-9)
      throw InputError("structured automorphism: block " + std::to_string(k) + " is not unitary");
  }
  const auto& alg = *carrier;
  auto a = from_map(carrier, [&](const Vec& v) { return apply_structure(alg, s, v); });
  a.structure_ = std::move(s);
  return a;
}

StarAutomorphism StarAutomorphism::compose(const StarAutomorphism& inner) const {
  if (inner.carrier_ != carrier_) throw InputError("compose: carrier mismatch");
  StarAutomorphism out(carrier_, m_ * inner.m_, inner.inv_ * inv_);
  if (structure_ && inner.structure_) {
    const auto& s = *structure_;
    const auto& t = *inner.structure_;
    const std::size_t m = s.sigma.size();
    std::vector<std::size_t> sinv(m);
    for (std::size_t k = 0; k < m; ++k) sinv[s.sigma[k]] = k;
    BlockStructure c;
    c.sigma.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
      c.sigma[k] = s.sigma[t.sigma[k]];
      c.unitaries.push_back(s.unitaries[k] * t.unitaries[sinv[k]]);
    }
    out.structure_ = std::move(c);
  }
  return out;
}

StarAutomorphism StarAutomorphism::inverse() const {
  StarAutomorphism out(carrier_, inv_, m_);
  if (structure_) {
    const auto& s = *structure_;
    const std::size_t m = s.sigma.size();
    std::vector<std::size_t> sinv(m);
    for (std::size_t k = 0; k < m; ++k) sinv[s.sigma[k]] = k;
    BlockStructure c;
    c.sigma = sinv;
    for (std::size_t j = 0; j < m; ++j) c.unitaries.push_back(s.unitaries[s.sigma[j]].adjoint());
    out.structure_ = std::move(c);
  }
  return out;
}

Report StarAutomorphism::verify(double tol) const {
  Report r;
  const auto& alg = *carrier_;
  const std::size_t n = alg.dim();
  r.add(sweep("automorphism.multiplicative", "L(e_i e_j) = L(e_i) L(e_j)", {n, n}, tol, [&](auto t) {
    Vec ab = alg.multiply(alg.basis(t[0]), alg.basis(t[1]));
    return residual(Vec(m_ * ab), alg.multiply(m_.col(t[0]), m_.col(t[1])));
  }));
  r.add(sweep("automorphism.adjoint", "L(e_i*) = L(e_i)*", {n}, tol, [&](auto t) {
    return residual(Vec(m_ * alg.adjoint(alg.basis(t[0]))), alg.adjoint(m_.col(t[0])));
  }));
  r.add(single("automorphism.unit", "L(1) = 1", residual(Vec(m_ * alg.unit()), alg.unit()), tol));
  const auto nn = static_cast<Eigen::Index>(n);
  r.add(single("automorphism.inverse", "L L^-1 = id", residual(Mat(m_ * inv_), Mat(Mat::Identity(nn, nn))), tol));
  r.add(sweep("automorphism.norm", "||L(e_i)|| = ||e_i||", {n}, tol, [&](auto t) {
    return std::abs(alg.norm(m_.col(t[0])) - alg.norm(alg.basis(t[0])));
  }));
  if (structure_) {
    auto mds = std::dynamic_pointer_cast<const MatrixDirectSum>(carrier_);
    r.add(sweep("automorphism.structured", "L(A)_k = u_k A_{sigma^-1 k} u_k*", {n}, tol, [&](auto t) {
      return residual(Vec(m_.col(t[0])), apply_structure(*mds, *structure_, alg.basis(t[0])));
    }));
  }
  return r;
}

StarAutomorphism ad(const AlgebraPtr& carrier, const Vec& u, double tol) {
  const double ur = unitary_residual(*carrier, u);
  if (!(ur <= tol)) {
    std::ostringstream os;
    os << "ad: element is not unitary (residual " << ur << ")";
    throw InputError(os.str());
  }
  const Vec us = carrier->adjoint(u);
  auto a = StarAutomorphism::from_map(carrier, [&](const Vec& v) { return carrier->multiply(carrier->multiply(u, v), us); });
  if (auto mds = std::dynamic_pointer_cast<const MatrixDirectSum>(carrier)) {
    BlockStructure s;
    for (std::size_t k = 0; k < mds->block_count(); ++k) {
      s.sigma.push_back(k);
      s.unitaries.push_back(mds->block(u, k));
    }
    a.structure_ = std::move(s);
  }
  return a;
}

}  // namespace workbench

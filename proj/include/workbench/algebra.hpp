#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "workbench/report.hpp"
#include "workbench/types.hpp"

namespace workbench {

struct SparseEntry {
  std::uint32_t index;
  Complex value;
};
using SparseVec = std::vector<SparseEntry>;

// Finite-dimensional unital star-algebra over a distinguished basis e_0..e_{N-1},
// together with a faithful matrix representation (its "materialization") that
// supplies operator norms.
//
// Subclasses implement product()/involution() directly; multiply()/adjoint()
// go through structure constants cached on first use (N <= kStructureCacheLimit).
class StarAlgebra {
 public:
  static constexpr std::size_t kStructureCacheLimit = 4096;

  virtual ~StarAlgebra() = default;
  StarAlgebra(const StarAlgebra&) = delete;
  StarAlgebra& operator=(const StarAlgebra&) = delete;

  std::size_t dim() const { return dim_; }
  Vec basis(std::size_t i) const;
  Vec zero() const { return Vec::Zero(static_cast<Eigen::Index>(dim_)); }
  virtual Vec unit() const = 0;
  virtual std::string describe() const = 0;

  Vec multiply(const Vec& a, const Vec& b) const;
  Vec adjoint(const Vec& a) const;
  // Uncached evaluation of the defining formulas.
  Vec multiply_direct(const Vec& a, const Vec& b) const { return product(a, b); }
  Vec adjoint_direct(const Vec& a) const { return involution(a); }

  const SparseVec& basis_product(std::size_t i, std::size_t j) const;
  const SparseVec& basis_adjoint(std::size_t i) const;

  std::size_t rep_dim() const { return rep_dim_; }
  const std::vector<Mat>& rep_basis() const { return rep_; }
  Mat represent(const Vec& a) const;
  double norm(const Vec& a) const { return operator_norm(represent(a)); }
  // Rank of i -> represent(e_i) as a linear map into matrices.
  std::size_t rep_rank(double tol = kDefaultTolerance) const;

 protected:
  explicit StarAlgebra(std::size_t dim);
  virtual Vec product(const Vec& a, const Vec& b) const = 0;
  virtual Vec involution(const Vec& a) const = 0;
  // Basis images of the materialization; called once from the subclass constructor.
  void set_materialization(std::vector<Mat> images);

 private:
  void build_cache() const;

  std::size_t dim_;
  std::size_t rep_dim_ = 0;
  std::vector<Mat> rep_;
  mutable std::once_flag cache_once_;
  mutable std::vector<SparseVec> products_;
  mutable std::vector<SparseVec> adjoints_;
};

using AlgebraPtr = std::shared_ptr<const StarAlgebra>;

// Direct sum of full matrix blocks M_{d_1} + ... + M_{d_m}. Coordinates run block
// by block, row-major inside a block. Materialization is block-diagonal.
class MatrixDirectSum final : public StarAlgebra {
 public:
  explicit MatrixDirectSum(std::vector<std::size_t> block_dims);

  const std::vector<std::size_t>& block_dims() const { return dims_; }
  std::size_t block_count() const { return dims_.size(); }
  std::size_t offset(std::size_t k) const { return offsets_[k]; }

  Mat block(const Vec& a, std::size_t k) const;
  std::vector<Mat> to_blocks(const Vec& a) const;
  Vec from_blocks(const std::vector<Mat>& blocks) const;
  // Accepts a full block-diagonal matrix of size sum d_k.
  Vec from_matrix(const Mat& m) const;

  Vec unit() const override;
  std::string describe() const override;

 protected:
  Vec product(const Vec& a, const Vec& b) const override;
  Vec involution(const Vec& a) const override;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
};

std::shared_ptr<const MatrixDirectSum> matrix_algebra(std::size_t n);
std::shared_ptr<const MatrixDirectSum> direct_sum(std::vector<std::size_t> block_dims);

// A (x) B with coordinate index i*dim(B)+j. Kronecker materialization.
class TensorProduct final : public StarAlgebra {
 public:
  TensorProduct(AlgebraPtr left, AlgebraPtr right);
  const AlgebraPtr& left() const { return left_; }
  const AlgebraPtr& right() const { return right_; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * right_->dim() + j; }
  Vec elementary(const Vec& a, const Vec& b) const;

  Vec unit() const override;
  std::string describe() const override;

 protected:
  Vec product(const Vec& a, const Vec& b) const override;
  Vec involution(const Vec& a) const override;

 private:
  AlgebraPtr left_, right_;
};

AlgebraPtr tensor(AlgebraPtr a, AlgebraPtr b);

// max(||u*u - 1||, ||uu* - 1||) in operator norm.
double unitary_residual(const StarAlgebra& alg, const Vec& u);

Report verify_star_algebra(const StarAlgebra& alg, double tol = kDefaultTolerance);

// Matrix (in target coordinates) of the linear map sending e_i to f(e_i).
Mat matrix_of(const StarAlgebra& source, std::size_t target_dim,
              const std::function<Vec(const Vec&)>& f);

// Block permutation plus per-block unitaries: A_k -> u_k A_{sigma^-1(k)} u_k*.
struct BlockStructure {
  std::vector<std::size_t> sigma;
  std::vector<Mat> unitaries;
};

class StarAutomorphism {
 public:
  static StarAutomorphism identity(AlgebraPtr carrier);
  // Throws InputError if the matrix is singular or has the wrong shape. Does not
  // check multiplicativity; see verify().
  static StarAutomorphism from_matrix(AlgebraPtr carrier, Mat m);
  static StarAutomorphism from_map(AlgebraPtr carrier, const std::function<Vec(const Vec&)>& f);
  static StarAutomorphism structured(std::shared_ptr<const MatrixDirectSum> carrier,
                                     BlockStructure s);

  Vec operator()(const Vec& a) const { return m_ * a; }
  const Mat& matrix() const { return m_; }
  const Mat& inverse_matrix() const { return inv_; }
  const AlgebraPtr& carrier() const { return carrier_; }
  const std::optional<BlockStructure>& structure() const { return structure_; }

  // (*this) o inner
  StarAutomorphism compose(const StarAutomorphism& inner) const;
  StarAutomorphism inverse() const;

  Report verify(double tol = kDefaultTolerance) const;

 private:
  friend StarAutomorphism ad(const AlgebraPtr&, const Vec&, double);
  StarAutomorphism(AlgebraPtr c, Mat m, Mat inv) : carrier_(std::move(c)), m_(std::move(m)), inv_(std::move(inv)) {}
  AlgebraPtr carrier_;
  Mat m_, inv_;
  std::optional<BlockStructure> structure_;
};

// a -> u a u*. Throws InputError when u is not unitary within tol.
StarAutomorphism ad(const AlgebraPtr& carrier, const Vec& u, double tol = kDefaultTolerance);

}  // namespace workbench

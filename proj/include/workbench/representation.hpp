#pragma once

#include <string>
#include <vector>

#include "workbench/algebra.hpp"
#include "workbench/report.hpp"

namespace workbench {

// Linear map from an algebra into N x N matrices, given on the basis.
class Representation {
 public:
  Representation(AlgebraPtr source, std::vector<Mat> images);

  const AlgebraPtr& source() const { return source_; }
  std::size_t hilbert_dim() const { return dim_; }
  const Mat& image(std::size_t i) const { return images_[i]; }
  const std::vector<Mat>& images() const { return images_; }
  Mat operator()(const Vec& a) const;

  // Rank of the map as a linear map into matrices.
  std::size_t rank(double tol = 1e-8) const;
  bool faithful() const { return rank() == source_->dim(); }

  // Multiplicative and adjoint-preserving on the basis, unit to identity.
  Report verify(double tol = kDefaultTolerance, const std::string& prefix = "representation") const;

 private:
  AlgebraPtr source_;
  std::vector<Mat> images_;
  std::size_t dim_;
};

// The algebra's own materialization, as a Representation.
Representation materialization(const AlgebraPtr& alg);

}  // namespace workbench

#pragma once

#include <functional>
#include <string>

#include "workbench/algebra.hpp"
#include "workbench/report.hpp"

namespace workbench {

// Linear map between star-algebras in their distinguished bases, with a residual
// certificate computed at construction (multiplicativity over all basis pairs,
// adjoint, unit, invertibility).
class StarIsomorphism {
 public:
  StarIsomorphism(AlgebraPtr source, AlgebraPtr target, Mat matrix, std::string name,
                  double tol = kDefaultTolerance);
  static StarIsomorphism from_map(AlgebraPtr source, AlgebraPtr target, const std::function<Vec(const Vec&)>& f,
                                  std::string name, double tol = kDefaultTolerance);

  const AlgebraPtr& source() const { return source_; }
  const AlgebraPtr& target() const { return target_; }
  const Mat& matrix() const { return m_; }
  const std::string& name() const { return name_; }
  Vec operator()(const Vec& v) const { return m_ * v; }

  const Report& certificate() const { return cert_; }
  bool verified() const { return cert_.ok(); }
  double condition_number() const { return cond_; }

  // next o (*this)
  StarIsomorphism then(const StarIsomorphism& next, std::string name, double tol = kDefaultTolerance) const;
  StarIsomorphism inverse(std::string name, double tol = kDefaultTolerance) const;

 private:
  AlgebraPtr source_, target_;
  Mat m_;
  std::string name_;
  Report cert_;
  double cond_ = 0.0;
};

Report certify_isomorphism(const StarAlgebra& source, const StarAlgebra& target, const Mat& m, double tol,
                           const std::string& prefix, double* condition = nullptr);

}  // namespace workbench

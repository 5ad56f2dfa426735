#include "workbench/isomorphism.hpp"

#include <limits>

namespace workbench {

Report certify_isomorphism(const StarAlgebra& src, const StarAlgebra& dst, const Mat& m, double tol,
                           const std::string& prefix, double* condition) {
  Report r;
  const std::size_t n = src.dim();
  if (static_cast<std::size_t>(m.rows()) != dst.dim() || static_cast<std::size_t>(m.cols()) != n)
    throw InputError(prefix + ": matrix shape does not match source/target dimensions");

  r.add(sweep(prefix + ".multiplicative", "T(e_i e_j) = T(e_i) T(e_j)", {n, n}, tol, [&](auto t) {
    Vec prod = Vec::Zero(static_cast<Eigen::Index>(dst.dim()));
    for (const auto& p : src.basis_product(t[0], t[1])) prod += p.value * m.col(p.index);
    return residual(prod, dst.multiply(m.col(t[0]), m.col(t[1])));
  }));
  r.add(sweep(prefix + ".adjoint", "T(e_i*) = T(e_i)*", {n}, tol, [&](auto t) {
    Vec img = Vec::Zero(static_cast<Eigen::Index>(dst.dim()));
    for (const auto& p : src.basis_adjoint(t[0])) img += p.value * m.col(p.index);
    return residual(img, dst.adjoint(m.col(t[0])));
  }));
  r.add(single(prefix + ".unit", "T(1) = 1", residual(Vec(m * src.unit()), dst.unit()), tol));

  double cond = std::numeric_limits<double>::infinity();
  bool invertible = false;
  if (src.dim() == dst.dim()) {
    Eigen::BDCSVD<Mat> svd(m);
    const auto& s = svd.singularValues();
    const double smax = s(0), smin = s(s.size() - 1);
    if (smin > 1e-8 * std::max(1.0, smax)) {
      invertible = true;
      cond = smax / smin;
    }
  }
  if (condition) *condition = cond;
  r.add(single(prefix + ".invertible", "T bijective (dimensions equal, full rank)", invertible ? 0.0 : 1.0, tol));
  return r;
}

StarIsomorphism::StarIsomorphism(AlgebraPtr source, AlgebraPtr target, Mat matrix, std::string name, double tol)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)), name_(std::move(name)) {
  cert_ = certify_isomorphism(*source_, *target_, m_, tol, name_, &cond_);
}

StarIsomorphism StarIsomorphism::from_map(AlgebraPtr source, AlgebraPtr target,
                                          const std::function<Vec(const Vec&)>& f, std::string name, double tol) {
  Mat m = matrix_of(*source, target->dim(), f);
  return StarIsomorphism(std::move(source), std::move(target), std::move(m), std::move(name), tol);
}

StarIsomorphism StarIsomorphism::then(const StarIsomorphism& next, std::string name, double tol) const {
  if (next.source_->dim() != target_->dim()) throw InputError("then: dimension mismatch");
  return StarIsomorphism(source_, next.target_, next.m_ * m_, std::move(name), tol);
}

StarIsomorphism StarIsomorphism::inverse(std::string name, double tol) const {
  Eigen::FullPivLU<Mat> lu(m_);
  if (!lu.isInvertible()) throw InputError(name_ + " is not invertible");
  return StarIsomorphism(target_, source_, lu.inverse(), std::move(name), tol);
}

}  // namespace workbench

#include "workbench/representation.hpp"

namespace workbench {

Representation::Representation(AlgebraPtr source, std::vector<Mat> images)
    : source_(std::move(source)), images_(std::move(images)) {
  if (images_.size() != source_->dim()) throw InputError("representation needs one image per basis element");
  dim_ = static_cast<std::size_t>(images_.front().rows());
  for (const auto& m : images_)
    if (static_cast<std::size_t>(m.rows()) != dim_ || m.rows() != m.cols())
      throw InputError("representation images must be square of equal size");
}

Mat Representation::operator()(const Vec& a) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  Mat m = Mat::Zero(d, d);
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (a[i] != Complex(0.0)) m += a[i] * images_[i];
  return m;
}

std::size_t Representation::rank(double tol) const {
  const auto d2 = static_cast<Eigen::Index>(dim_ * dim_);
  Mat stacked(d2, static_cast<Eigen::Index>(images_.size()));
  for (std::size_t i = 0; i < images_.size(); ++i)
    stacked.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vec>(images_[i].data(), d2);
  Eigen::BDCSVD<Mat> svd(stacked);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

Report Representation::verify(double tol, const std::string& prefix) const {
  Report r;
  const auto& alg = *source_;
  const std::size_t n = alg.dim();
  r.add(sweep(prefix + ".multiplicative", "pi(e_i e_j) = pi(e_i) pi(e_j)", {n, n}, tol, [&](auto t) {
    const auto d = static_cast<Eigen::Index>(dim_);
    Mat lhs = Mat::Zero(d, d);
    for (const auto& p : alg.basis_product(t[0], t[1])) lhs += p.value * images_[p.index];
    return residual(lhs, Mat(images_[t[0]] * images_[t[1]]));
  }));
  r.add(sweep(prefix + ".adjoint", "pi(e_i*) = pi(e_i)*", {n}, tol, [&](auto t) {
    return residual((*this)(alg.adjoint(alg.basis(t[0]))), Mat(images_[t[0]].adjoint()));
  }));
  const auto d = static_cast<Eigen::Index>(dim_);
  r.add(single(prefix + ".unit", "pi(1) = I", residual((*this)(alg.unit()), Mat(Mat::Identity(d, d))), tol));
  return r;
}

Representation materialization(const AlgebraPtr& alg) { return Representation(alg, alg->rep_basis()); }

}  // namespace workbench

#pragma once

#include <memory>

#include "workbench/algebra.hpp"
#include "workbench/isomorphism.hpp"
#include "workbench/representation.hpp"
#include "workbench/twisted_action.hpp"

namespace workbench {

// A x|_a^alpha G: functions G -> A with twisted convolution
//   (f * g)(x) = sum_y f(y) a_y[g(y^-1 x)] alpha(y, y^-1 x)
//   f^*(x)     = alpha(x, x^-1)* a_x[f(x^-1)*]
// Basis delta_x (x) e_i at index x*dim(A)+i. Materialized by the regular
// representation built on the base algebra's materialization.
class CrossedProduct final : public StarAlgebra {
 public:
  explicit CrossedProduct(TwistedAction action);

  const TwistedAction& action() const { return action_; }
  const GroupPtr& group() const { return action_.group; }
  const AlgebraPtr& base() const { return action_.algebra; }

  std::size_t index(std::size_t x, std::size_t i) const { return x * base()->dim() + i; }
  Vec slice(const Vec& f, std::size_t x) const;
  void set_slice(Vec& f, std::size_t x, const Vec& m) const;
  Vec point_mass(std::size_t x, const Vec& m) const;

  // The defining formulas, evaluated without the structure-constant cache.
  Vec convolve(const Vec& f, const Vec& g) const { return product(f, g); }
  Vec involute(const Vec& f) const { return involution(f); }

  // sum_x ||f(x)||
  double l1_norm(const Vec& f) const;

  Vec unit() const override;
  std::string describe() const override;

 protected:
  Vec product(const Vec& f, const Vec& g) const override;
  Vec involution(const Vec& f) const override;

 private:
  TwistedAction action_;
};

using CrossedProductPtr = std::shared_ptr<const CrossedProduct>;

CrossedProductPtr crossed_product(TwistedAction action);

// Integrated regular covariant representation on C^{d|G|} (index x*d+k):
//   (pi(m) W)(x) = varpi(a_x m) W(x),  (U_z W)(x) = varpi(alpha(x,z)) W(xz),
// delta_z (x) e_i -> pi(e_i) U_z.
Representation regular_representation(const CrossedProductPtr& cp, const Representation& varpi);
std::vector<Mat> regular_images(const TwistedAction& ta, const std::vector<Mat>& varpi);

// iota_q(f)(x) = f(x) q_x*, from A x|_b G onto A x|_b' G where b' is the
// exterior transform of b by q.
StarIsomorphism iota(const CrossedProductPtr& source, const CrossedProductPtr& target, const OneCochain& q,
                     double tol = kDefaultTolerance);
Vec iota_apply(const CrossedProduct& cp, const Vec& f, const OneCochain& q);

}  // namespace workbench

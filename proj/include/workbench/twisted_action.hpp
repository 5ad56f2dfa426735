#pragma once

#include <vector>

#include "workbench/algebra.hpp"
#include "workbench/group.hpp"
#include "workbench/report.hpp"

namespace workbench {

// (a, alpha): automorphisms a_x and unitary cocycle alpha(x,y), stored densely
// with alpha(x,y) at index x*|G|+y.
struct TwistedAction {
  GroupPtr group;
  AlgebraPtr algebra;
  std::vector<StarAutomorphism> maps;
  std::vector<Vec> cocycle;

  std::size_t order() const { return group->order(); }
  const StarAutomorphism& act(std::size_t x) const { return maps[x]; }
  Vec apply(std::size_t x, const Vec& m) const { return maps[x](m); }
  const Vec& alpha(std::size_t x, std::size_t y) const { return cocycle[x * group->order() + y]; }
};

// Checks table sizes and carriers only.
TwistedAction make_twisted_action(GroupPtr g, AlgebraPtr alg, std::vector<StarAutomorphism> maps,
                                  std::vector<Vec> cocycle);
TwistedAction trivial_action(GroupPtr g, AlgebraPtr alg);
// Cocycle identically 1.
TwistedAction untwisted_action(GroupPtr g, AlgebraPtr alg, std::vector<StarAutomorphism> maps);

Report verify_twisted_action(const TwistedAction& ta, double tol = kDefaultTolerance,
                             const std::string& prefix = "action");

// Normalized unitary 1-cochain x -> q_x.
struct OneCochain {
  GroupPtr group;
  AlgebraPtr algebra;
  std::vector<Vec> values;
  const Vec& operator()(std::size_t x) const { return values[x]; }
};

OneCochain trivial_cochain(GroupPtr g, AlgebraPtr alg);
Report verify_cochain(const OneCochain& q, double tol = kDefaultTolerance, const std::string& prefix = "cochain");
// x -> q_x*
OneCochain inverse_cochain(const OneCochain& q);
// x -> p_x q_x
OneCochain cochain_product(const OneCochain& p, const OneCochain& q);

// a_x = ad(rho_x), alpha(x,y) = rho_x rho_y rho_xy*.
TwistedAction inner_action(const OneCochain& rho, double tol = kDefaultTolerance);

// b'_x = ad(q_x) o b_x,  beta'(x,y) = q_x b_x(q_y) beta(x,y) q_xy*.
TwistedAction exterior_transform(const TwistedAction& b, const OneCochain& q, double tol = kDefaultTolerance);

// Checks that (b2, beta2) is obtained from (b, beta) through q by the two
// formulas above, exhaustively.
Report check_exterior_equivalence(const TwistedAction& b, const TwistedAction& b2, const OneCochain& q,
                                  double tol = kDefaultTolerance, const std::string& prefix = "exterior");

// For a twisted action of G x H: c'_(h,g) = c_(g,h), gamma'((h,g),(k,l)) = gamma((g,h),(l,k)).
TwistedAction flip(const TwistedAction& ta);

// Max entrywise difference of the two actions' maps and cocycles (same group order required).
double action_distance(const TwistedAction& a, const TwistedAction& b);

}  // namespace workbench

#pragma once

#include <vector>

#include "workbench/report.hpp"
#include "workbench/twisted_action.hpp"

namespace workbench {

// {(A, kappa), (a, alpha), (at, alphat)}: twisted actions of G and Gt on the same
// algebra plus a unitary coupling kappa(x, xi) stored at x*|Gt|+xi.
struct SemiCovariantStructure {
  TwistedAction g;   // (a, alpha)
  TwistedAction gt;  // (at, alphat)
  std::vector<Vec> coupling;
  GroupPtr product;  // G x Gt, element (x, xi) at x*|Gt|+xi

  const AlgebraPtr& algebra() const { return g.algebra; }
  const FiniteGroup& G() const { return *g.group; }
  const FiniteGroup& Gt() const { return *gt.group; }
  const Vec& kappa(std::size_t x, std::size_t xi) const { return coupling[x * gt.order() + xi]; }
};

// Checks carriers and table sizes, and builds the product group.
SemiCovariantStructure make_semi_covariant(TwistedAction g, TwistedAction gt, std::vector<Vec> coupling);

// Coupling constantly 1.
std::vector<Vec> unit_coupling(const TwistedAction& g, const TwistedAction& gt);

// Both twisted-action sweeps, coupling normalization and unitarity, the three
// compatibility identities and the four-variable identity they imply.
Report check_covariant(const SemiCovariantStructure& s, double tol = kDefaultTolerance);

class CovariantStructure {
 public:
  const SemiCovariantStructure& data() const { return s_; }
  const Report& certificate() const { return cert_; }
  double tolerance() const { return tol_; }

  const AlgebraPtr& algebra() const { return s_.algebra(); }
  const TwistedAction& g() const { return s_.g; }
  const TwistedAction& gt() const { return s_.gt; }
  const FiniteGroup& G() const { return s_.G(); }
  const FiniteGroup& Gt() const { return s_.Gt(); }
  const GroupPtr& product_group() const { return s_.product; }
  const Vec& kappa(std::size_t x, std::size_t xi) const { return s_.kappa(x, xi); }

 private:
  friend CovariantStructure verify_covariant(SemiCovariantStructure, double);
  CovariantStructure(SemiCovariantStructure s, Report r, double tol) : s_(std::move(s)), cert_(std::move(r)), tol_(tol) {}
  SemiCovariantStructure s_;
  Report cert_;
  double tol_;
};

// Throws VerificationError naming the first failing identity and its witness.
CovariantStructure verify_covariant(SemiCovariantStructure s, double tol = kDefaultTolerance);

// (x,xi) -> at_xi o a_x,  ((x,xi),(y,eta)) -> at_xi[kappa(x,eta)] alphat(xi,eta) at_{xi eta}[alpha(x,y)]
TwistedAction forward_action(const CovariantStructure& cs);
// (x,xi) -> a_x o at_xi,  ((x,xi),(y,eta)) -> a_x[kappa(y,xi)*] alpha(x,y) a_xy[alphat(xi,eta)]
TwistedAction backward_action(const CovariantStructure& cs);
// kappa as a 1-cochain on G x Gt.
OneCochain coupling_cochain(const CovariantStructure& cs);

// Twisted-action sweeps of both product actions, the restriction identities of
// both cocycles to G x {e} / {e} x Gt, and the exterior equivalence
// backward = transform(forward, kappa).
Report check_product_actions(const CovariantStructure& cs, double tol = kDefaultTolerance);

// a = ad(rho), alpha = rho rho rho*, requiring at_xi(rho_x) = kappa(x,xi)* rho_x.
CovariantStructure from_G_cochain(const OneCochain& rho, TwistedAction gt, std::vector<Vec> kappa,
                                  double tol = kDefaultTolerance);
// at = ad(rhot), alphat = rhot rhot rhot*, requiring a_x(rhot_xi) = kappa(x,xi) rhot_xi.
CovariantStructure from_Gtilde_cochain(const OneCochain& rhot, TwistedAction g, std::vector<Vec> kappa,
                                       double tol = kDefaultTolerance);

Report check_G_particular(const TwistedAction& gt, const OneCochain& rho, const std::vector<Vec>& kappa,
                          double tol = kDefaultTolerance, const std::string& prefix = "particular.G");
Report check_Gtilde_particular(const TwistedAction& g, const OneCochain& rhot, const std::vector<Vec>& kappa,
                               double tol = kDefaultTolerance, const std::string& prefix = "particular.Gt");

}  // namespace workbench

#pragma once

#include "workbench/covariant.hpp"
#include "workbench/crossed_product.hpp"
#include "workbench/isomorphism.hpp"

namespace workbench {

// A covariant structure living on a crossed product of the base algebra, with
// the unitary cochain that makes it particular (lambda_x = delta_x (x) 1 on the
// G side, delta_xi (x) 1 on the Gt side).
struct FirstGeneration {
  CrossedProductPtr algebra;
  CovariantStructure structure;
  OneCochain cochain;
};

// On B = A x|_a^alpha G:
//   k(x,xi) = delta_e (x) kappa(x,xi)
//   b_x = ad(lambda_x),  beta(x,y) = delta_e (x) alpha(x,y)
//   bt_xi(f)(y) = at_xi[f(y)] kappa(y,xi)*,  betat(xi,eta) = delta_e (x) alphat(xi,eta)
FirstGeneration first_generation_G(const CovariantStructure& cs, double tol = kDefaultTolerance);

// On C = A x|_at^alphat Gt:
//   kt(x,xi) = delta_eps (x) kappa(x,xi)
//   c_x(f)(zeta) = a_x[f(zeta)] kappa(x,zeta),  gamma(x,y) = delta_eps (x) alpha(x,y)
//   ct_xi = ad(delta_xi (x) 1),  gammat(xi,eta) = delta_eps (x) alphat(xi,eta)
FirstGeneration first_generation_Gtilde(const CovariantStructure& cs, double tol = kDefaultTolerance);

// Particular-covariance condition, amplified cocycles, lambda cocycle law and
// the action of the first-generation maps on delta_e (x) m.
Report check_first_generation_G(const CovariantStructure& cs, const FirstGeneration& fg,
                                double tol = kDefaultTolerance);
Report check_first_generation_Gtilde(const CovariantStructure& cs, const FirstGeneration& fg,
                                     double tol = kDefaultTolerance);

// Layouts:
//   BGt = B x| Gt : index (xi*|G| + x)*dim A + i
//   CG  = C x| G  : index (x*|Gt| + xi)*dim A + i
//   forward/backward over G x Gt : index (x*|Gt| + xi)*dim A + i
struct GenerationBundle {
  CovariantStructure cs;
  FirstGeneration B;
  FirstGeneration C;
  CrossedProductPtr BGt;
  CrossedProductPtr CG;
  CrossedProductPtr forward;
  CrossedProductPtr backward;
};

GenerationBundle build_bundle(const CovariantStructure& cs, double tol = kDefaultTolerance);

// backward -> forward: F(x,xi) kappa(x,xi)
StarIsomorphism iso_gamma(const GenerationBundle& b, double tol = kDefaultTolerance);
// BGt -> CG: [F(xi)](x) kappa(x,xi) placed at (x, xi)
StarIsomorphism iso_upsilon(const GenerationBundle& b, double tol = kDefaultTolerance);
// BGt -> backward: [F(xi)](x) placed at (x, xi)
StarIsomorphism iso_phi(const GenerationBundle& b, double tol = kDefaultTolerance);
// CG -> forward: [F(x)](xi) placed at (x, xi)
StarIsomorphism iso_psi(const GenerationBundle& b, double tol = kDefaultTolerance);

// Closed-form laws on the product-group algebras, written out in terms of the
// base data rather than the product twisted actions.
Vec forward_law_product(const CovariantStructure& cs, const Vec& F, const Vec& G);
Vec forward_law_involution(const CovariantStructure& cs, const Vec& F);
Vec backward_law_product(const CovariantStructure& cs, const Vec& F, const Vec& G);
Vec backward_law_involution(const CovariantStructure& cs, const Vec& F);

// Closed-form laws against generic convolution on every basis pair.
Report check_composition_laws(const GenerationBundle& b, double tol = kDefaultTolerance);

// Dimensions, the four isomorphism certificates and Psi o Upsilon = Gamma o Phi.
Report check_isomorphisms(const GenerationBundle& b, double tol = kDefaultTolerance);

}  // namespace workbench

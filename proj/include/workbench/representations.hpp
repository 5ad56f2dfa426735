#pragma once

#include <vector>

#include "workbench/covariant.hpp"
#include "workbench/crossed_product.hpp"
#include "workbench/generations.hpp"
#include "workbench/representation.hpp"

namespace workbench {

// (pi, U) for a single twisted action: U_x U_y = pi[alpha(x,y)] U_xy, U_x pi(m) U_x* = pi[a_x m].
struct TwistedPair {
  Representation pi;
  std::vector<Mat> U;
};

Report verify_twisted_pair(const TwistedAction& ta, const TwistedPair& p, double tol = kDefaultTolerance,
                           const std::string& prefix = "pair");

// delta_z (x) e_i -> pi(e_i) U_z
Representation integrated_form(const CrossedProductPtr& cp, const TwistedPair& p);

// Regular pair on C^{|G| d}: (pi(m) W)(x) = varpi(a_x m) W(x), (U_z W)(x) = varpi(alpha(x,z)) W(xz).
TwistedPair regular_pair(const TwistedAction& ta, const Representation& varpi);

// (pi, U, V) with U_x V_xi = pi[kappa(x,xi)] V_xi U_x.
struct CovariantRep {
  Representation pi;
  std::vector<Mat> U;
  std::vector<Mat> V;
  std::size_t hilbert_dim() const { return pi.hilbert_dim(); }
};

Report verify_covariant_rep(const CovariantStructure& cs, const CovariantRep& cr, double tol = kDefaultTolerance,
                            const std::string& prefix = "covrep");

// Induced by a faithful varpi on C^k, acting on C^{|G||Gt|k} with index (x*|Gt| + xi)*k + j:
//   [pi(m) W](x,xi) = varpi[(at_xi o a_x) m] W(x,xi)
//   (U_z W)(x,xi)   = varpi{at_xi[alpha(x,z)]} W(xz,xi)
//   (V_zeta W)(x,xi) = varpi{at_xi[kappa(x,zeta)] alphat(xi,zeta)} W(x,xi zeta)
// Throws InputError when varpi is not faithful.
CovariantRep induce(const CovariantStructure& cs, const Representation& varpi);

// W(x,xi) = V_xi U_x for the forward action, W'(x,xi) = U_x V_xi for the backward one.
struct ProductReps {
  TwistedPair forward;
  TwistedPair backward;
};
ProductReps to_product_rep(const CovariantStructure& cs, const CovariantRep& cr);
// U_x = W(x,eps), V_xi = W(e,xi).
CovariantRep from_product_rep(const CovariantStructure& cs, const TwistedPair& forward);

// On B x| Gt: delta_xi (x) delta_x (x) e_i -> pi(e_i) U_x V_xi.
Representation double_integrated(const GenerationBundle& b, const CovariantRep& cr);
// On C x| G: delta_x (x) delta_xi (x) e_i -> pi(e_i) V_xi U_x.
Representation double_integrated_CG(const GenerationBundle& b, const CovariantRep& cr);

// The integrated forms of one covariant representation on all four algebras,
// intertwined by Gamma, Upsilon, Phi and Psi on every basis element.
Report check_correspondence(const GenerationBundle& b, const CovariantRep& cr, double tol = kDefaultTolerance);

}  // namespace workbench

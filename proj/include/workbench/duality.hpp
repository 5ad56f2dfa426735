#pragma once

#include <memory>
#include <vector>

#include "workbench/covariant.hpp"
#include "workbench/crossed_product.hpp"
#include "workbench/generations.hpp"
#include "workbench/isomorphism.hpp"

namespace workbench {

// {(A, kappa0), (a, alpha), (id, 1)} where Gt is the character group of G and
// kappa0(x, xi) = xi(x) 1. G must be abelian with a cyclic decomposition.
CovariantStructure standard_structure(const TwistedAction& ta, double tol = kDefaultTolerance);

// Untwisted action of the character group on A x|_a^alpha G:
//   [b_xi(f)](x) = f(x) conj(xi(x))
TwistedAction dual_action(const CrossedProductPtr& cp, const GroupPtr& characters);
// dual_action against the first-generation G-side structure of the standard structure.
Report check_dual_action(const CovariantStructure& standard, double tol = kDefaultTolerance);

// C(G) as |G| one-dimensional blocks; delta_y is basis vector y.
std::shared_ptr<const MatrixDirectSum> function_algebra(std::size_t n);

// t_x(phi)(y) = phi(yx) on C(G), untwisted.
TwistedAction translation_action(const GroupPtr& g, const AlgebraPtr& cg);
// (a (x) t, alpha (x) 1) on A (x) C(G).
TwistedAction tensor_translation_action(const TwistedAction& ta, const AlgebraPtr& a_cg);

// (Ff)(y) = sum_xi xi(y) f(xi), from A x|_id Gt onto A (x) C(G). No 1/|G| factor.
StarIsomorphism fourier_iso(const CrossedProductPtr& c, const AlgebraPtr& a_cg, const FiniteGroup& g,
                            double tol = kDefaultTolerance);

// [Theta(F)](z, x) = a_x[F(z)(x)] alpha(x, z), with z the crossed-product variable
// and x the C(G) variable, onto A (x) (C(G) x|_t G).
StarIsomorphism theta_iso(const CrossedProductPtr& source, const AlgebraPtr& target, const TwistedAction& ta,
                          double tol = kDefaultTolerance);

// delta_z (x) phi -> mult(phi) L_z with (L_z h)(y) = h(yz), onto M_|G|.
StarIsomorphism stabilization_iso(const CrossedProductPtr& translation, double tol = kDefaultTolerance);

// (A x|_a^alpha G) x|_b Gt -> (A x|_id Gt) x|_c^gamma G -> (A (x) C(G)) x|_{a(x)t}^{alpha(x)1} G
//   -> A (x) (C(G) x|_t G) -> A (x) M_|G|
struct TakaiChain {
  CovariantStructure cs;
  GenerationBundle bundle;
  AlgebraPtr a_cg;
  CrossedProductPtr transported;
  CrossedProductPtr translation;
  AlgebraPtr theta_target;
  AlgebraPtr final_algebra;
  std::vector<StarIsomorphism> arrows;  // upsilon, fourier, theta, stabilization
  StarIsomorphism composite;
  Report transport;  // F c_x F^-1 = a_x (x) t_x and F(gamma) = alpha (x) 1

  // Every certificate, the transport checks and the dimension law.
  Report report() const;
};

TakaiChain takai_chain(const TwistedAction& ta, double tol = kDefaultTolerance);

// C*_sigma(H): delta_g delta_h = sigma(g,h) delta_gh, delta_h* = conj(sigma(h,h^-1)) delta_{h^-1}.
// Materialized by the left regular projective representation.
class TwistedGroupAlgebra final : public StarAlgebra {
 public:
  TwistedGroupAlgebra(GroupPtr h, std::vector<Complex> sigma);

  const GroupPtr& group() const { return h_; }
  Complex sigma(std::size_t g, std::size_t h) const { return sigma_[g * h_->order() + h]; }

  Vec unit() const override;
  std::string describe() const override;

 protected:
  Vec product(const Vec& a, const Vec& b) const override;
  Vec involution(const Vec& a) const override;

 private:
  GroupPtr h_;
  std::vector<Complex> sigma_;
};

// Normalization, modulus one and the cocycle identity for a scalar table.
Report verify_scalar_cocycle(const FiniteGroup& h, const std::vector<Complex>& sigma,
                             double tol = kDefaultTolerance);
// Throws VerificationError when sigma is not a normalized 2-cocycle.
std::shared_ptr<const TwistedGroupAlgebra> twisted_group_algebra(GroupPtr h, std::vector<Complex> sigma,
                                                                  double tol = kDefaultTolerance);

// Nullity of z -> ([z, e_j])_j.
std::size_t center_dimension(const StarAlgebra& alg, double tol = 1e-8);

// c with v = c 1; throws InputError when v is not scalar.
Complex scalar_value(const StarAlgebra& alg, const Vec& v, double tol = kDefaultTolerance);

// For trivial actions and scalar forward cocycle sigma: e_i (x) delta_h -> delta_h (x) e_i,
// from A (x) C*_sigma(G x Gt) onto the forward crossed product.
struct Factorization {
  std::shared_ptr<const TwistedGroupAlgebra> group_algebra;
  AlgebraPtr source;
  CrossedProductPtr forward;
  StarIsomorphism iso;
};
Factorization factorization(const CovariantStructure& cs, double tol = kDefaultTolerance);

// With alpha = 1 and alphat = 1: kappa(x, xi eta) = kappa(x,xi) at_xi[kappa(x,eta)] and
// kappa(xy, xi)* = kappa(x,xi)* a_x[kappa(y,xi)*]. Also reports whether both cocycles are trivial.
Report crossed_morphism_check(const SemiCovariantStructure& s, double tol = kDefaultTolerance);
// Product cocycles in the untwisted case: forward = at_xi[kappa(x,eta)], backward = a_x[kappa(y,xi)*].
Report untwisted_product_cocycles(const CovariantStructure& cs, double tol = kDefaultTolerance);

// forward alpha(X,Y) = forward alpha(Y,X) for all pairs.
bool forward_cocycle_symmetric(const CovariantStructure& cs, double tol = kDefaultTolerance);
// alpha and alphat symmetric and kappa = 1.
bool symmetry_criterion(const CovariantStructure& cs, double tol = kDefaultTolerance);

}  // namespace workbench

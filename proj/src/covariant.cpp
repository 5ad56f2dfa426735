#include "workbench/covariant.hpp"

#include <algorithm>

namespace workbench {

SemiCovariantStructure make_semi_covariant(TwistedAction g, TwistedAction gt, std::vector<Vec> coupling) {
  if (g.algebra != gt.algebra) throw InputError("covariant structure: both actions must act on the same algebra");
  if (coupling.size() != g.order() * gt.order()) throw InputError("covariant structure: coupling table is incomplete");
  for (const auto& k : coupling)
    if (static_cast<std::size_t>(k.size()) != g.algebra->dim()) throw InputError("coupling value has wrong dimension");
  auto product = direct_product(g.group, gt.group);
  return SemiCovariantStructure{std::move(g), std::move(gt), std::move(coupling), std::move(product)};
}

std::vector<Vec> unit_coupling(const TwistedAction& g, const TwistedAction& gt) {
  return std::vector<Vec>(g.order() * gt.order(), g.algebra->unit());
}

Report check_covariant(const SemiCovariantStructure& s, double tol) {
  Report r = verify_twisted_action(s.g, tol, "action.G");
  r.merge(verify_twisted_action(s.gt, tol, "action.Gt"));
  const auto& alg = *s.algebra();
  const auto& G = s.G();
  const auto& Gt = s.Gt();
  const std::size_t n = G.order(), nt = Gt.order(), d = alg.dim();
  const std::size_t e = G.identity(), eps = Gt.identity();
  const Vec one = alg.unit();
  auto k = [&](std::size_t x, std::size_t xi) -> const Vec& { return s.kappa(x, xi); };
  auto ks = [&](std::size_t x, std::size_t xi) { return alg.adjoint(s.kappa(x, xi)); };
  auto mul = [&](const Vec& a, const Vec& b) { return alg.multiply(a, b); };
  const auto& a = s.g;
  const auto& at = s.gt;

  r.add(sweep("coupling.normalization", "kappa(e,xi) = 1 = kappa(x,eps)", {n, nt}, tol, [&](auto t) {
    double res = 0.0;
    if (t[0] == e) res = std::max(res, residual(k(e, t[1]), one));
    if (t[1] == eps) res = std::max(res, residual(k(t[0], eps), one));
    return res;
  }));
  r.add(sweep("coupling.unitary", "kappa(x,xi) unitary", {n, nt}, tol,
              [&](auto t) { return unitary_residual(alg, k(t[0], t[1])); }));

  r.add(sweep("covariant.commutation", "a_x o at_xi = ad kappa(x,xi) o at_xi o a_x", {n, nt}, tol, [&](auto t) {
    const Mat lhs = a.act(t[0]).matrix() * at.act(t[1]).matrix();
    const Mat rhs = at.act(t[1]).matrix() * a.act(t[0]).matrix();
    const Vec& u = k(t[0], t[1]);
    const Vec us = alg.adjoint(u);
    double res = 0.0;
    for (std::size_t i = 0; i < d; ++i) res = std::max(res, residual(Vec(lhs.col(i)), mul(mul(u, rhs.col(i)), us)));
    return res;
  }));
  r.add(sweep("covariant.cocycle_tilde",
              "a_x[alphat(xi,eta)] = kappa(x,xi) at_xi[kappa(x,eta)] alphat(xi,eta) kappa(x,xi eta)*", {n, nt, nt}, tol,
              [&](auto t) {
                const std::size_t x = t[0], xi = t[1], eta = t[2];
                Vec lhs = a.apply(x, at.alpha(xi, eta));
                Vec rhs = mul(mul(mul(k(x, xi), at.apply(xi, k(x, eta))), at.alpha(xi, eta)), ks(x, Gt.mul(xi, eta)));
                return residual(lhs, rhs);
              }));
  r.add(sweep("covariant.cocycle", "at_xi[alpha(x,y)] = kappa(x,xi)* a_x[kappa(y,xi)*] alpha(x,y) kappa(xy,xi)",
              {n, n, nt}, tol, [&](auto t) {
                const std::size_t x = t[0], y = t[1], xi = t[2];
                Vec lhs = at.apply(xi, a.alpha(x, y));
                Vec rhs = mul(mul(mul(ks(x, xi), a.apply(x, ks(y, xi))), a.alpha(x, y)), k(G.mul(x, y), xi));
                return residual(lhs, rhs);
              }));
  r.add(sweep("covariant.master",
              "at_xi[kappa(x,eta)] alphat(xi,eta) at_{xi eta}[alpha(x,y)] = kappa(x,xi)* (a_x o at_xi)[kappa(y,eta)*] "
              "a_x[kappa(y,xi)*] alpha(x,y) a_xy[alphat(xi,eta)] kappa(xy,xi eta)",
              {n, n, nt, nt}, tol, [&](auto t) {
                const std::size_t x = t[0], y = t[1], xi = t[2], eta = t[3];
                const std::size_t xy = G.mul(x, y), xieta = Gt.mul(xi, eta);
                Vec lhs = mul(mul(at.apply(xi, k(x, eta)), at.alpha(xi, eta)), at.apply(xieta, a.alpha(x, y)));
                Vec rhs = mul(ks(x, xi), a.apply(x, at.apply(xi, ks(y, eta))));
                rhs = mul(mul(rhs, a.apply(x, ks(y, xi))), a.alpha(x, y));
                rhs = mul(mul(rhs, a.apply(xy, at.alpha(xi, eta))), k(xy, xieta));
                return residual(lhs, rhs);
              }));
  return r;
}

CovariantStructure verify_covariant(SemiCovariantStructure s, double tol) {
  Report r = check_covariant(s, tol);
  require(r, "verify_covariant");
  return CovariantStructure(std::move(s), std::move(r), tol);
}

TwistedAction forward_action(const CovariantStructure& cs) {
  const auto& alg = *cs.algebra();
  const auto& H = *cs.product_group();
  const auto& Gt = cs.Gt();
  const std::size_t n = H.order();
  std::vector<StarAutomorphism> maps;
  for (std::size_t z = 0; z < n; ++z) {
    auto [x, xi] = H.split(z);
    maps.push_back(cs.gt().act(xi).compose(cs.g().act(x)));
  }
  std::vector<Vec> cocycle(n * n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t w = 0; w < n; ++w) {
      auto [x, xi] = H.split(z);
      auto [y, eta] = H.split(w);
      Vec v = alg.multiply(cs.gt().apply(xi, cs.kappa(x, eta)), cs.gt().alpha(xi, eta));
      cocycle[z * n + w] = alg.multiply(v, cs.gt().apply(Gt.mul(xi, eta), cs.g().alpha(x, y)));
    }
  return make_twisted_action(cs.product_group(), cs.algebra(), std::move(maps), std::move(cocycle));
}

TwistedAction backward_action(const CovariantStructure& cs) {
  const auto& alg = *cs.algebra();
  const auto& H = *cs.product_group();
  const auto& G = cs.G();
  const std::size_t n = H.order();
  std::vector<StarAutomorphism> maps;
  for (std::size_t z = 0; z < n; ++z) {
    auto [x, xi] = H.split(z);
    maps.push_back(cs.g().act(x).compose(cs.gt().act(xi)));
  }
  std::vector<Vec> cocycle(n * n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t w = 0; w < n; ++w) {
      auto [x, xi] = H.split(z);
      auto [y, eta] = H.split(w);
      Vec v = alg.multiply(cs.g().apply(x, alg.adjoint(cs.kappa(y, xi))), cs.g().alpha(x, y));
      cocycle[z * n + w] = alg.multiply(v, cs.g().apply(G.mul(x, y), cs.gt().alpha(xi, eta)));
    }
  return make_twisted_action(cs.product_group(), cs.algebra(), std::move(maps), std::move(cocycle));
}

OneCochain coupling_cochain(const CovariantStructure& cs) {
  return OneCochain{cs.product_group(), cs.algebra(), cs.data().coupling};
}

Report check_product_actions(const CovariantStructure& cs, double tol) {
  const auto fwd = forward_action(cs);
  const auto bwd = backward_action(cs);
  Report r = verify_twisted_action(fwd, tol, "forward");
  r.merge(verify_twisted_action(bwd, tol, "backward"));

  const auto& alg = *cs.algebra();
  const auto& H = *cs.product_group();
  const std::size_t n = cs.G().order(), nt = cs.Gt().order();
  const std::size_t e = cs.G().identity(), eps = cs.Gt().identity();
  const Vec one = alg.unit();
  auto P = [&](std::size_t x, std::size_t xi) { return H.pair(x, xi); };

  r.add(sweep("restriction.forward", "fwd alpha on G x e, e x Gt and mixed pairs", {n, n, nt, nt}, tol, [&](auto t) {
    const std::size_t x = t[0], y = t[1], xi = t[2], eta = t[3];
    double res = 0.0;
    if (xi == eps && eta == eps) res = std::max(res, residual(fwd.alpha(P(x, eps), P(y, eps)), cs.g().alpha(x, y)));
    if (x == e && y == e) res = std::max(res, residual(fwd.alpha(P(e, xi), P(e, eta)), cs.gt().alpha(xi, eta)));
    if (xi == eps && y == e) res = std::max(res, residual(fwd.alpha(P(x, eps), P(e, eta)), cs.kappa(x, eta)));
    if (x == e && eta == eps) res = std::max(res, residual(fwd.alpha(P(e, xi), P(y, eps)), one));
    return res;
  }));
  r.add(sweep("restriction.backward", "bwd alpha on G x e, e x Gt and mixed pairs", {n, n, nt, nt}, tol, [&](auto t) {
    const std::size_t x = t[0], y = t[1], xi = t[2], eta = t[3];
    double res = 0.0;
    if (xi == eps && eta == eps) res = std::max(res, residual(bwd.alpha(P(x, eps), P(y, eps)), cs.g().alpha(x, y)));
    if (x == e && y == e) res = std::max(res, residual(bwd.alpha(P(e, xi), P(e, eta)), cs.gt().alpha(xi, eta)));
    if (xi == eps && y == e) res = std::max(res, residual(bwd.alpha(P(x, eps), P(e, eta)), one));
    if (x == e && eta == eps) res = std::max(res, residual(bwd.alpha(P(e, xi), P(y, eps)), alg.adjoint(cs.kappa(y, xi))));
    return res;
  }));
  r.merge(check_exterior_equivalence(fwd, bwd, coupling_cochain(cs), tol, "exterior"));
  return r;
}

Report check_G_particular(const TwistedAction& gt, const OneCochain& rho, const std::vector<Vec>& kappa,
                          double tol, const std::string& prefix) {
  const auto& alg = *rho.algebra;
  const std::size_t n = rho.group->order(), nt = gt.order();
  if (kappa.size() != n * nt) throw InputError("coupling table is incomplete");
  Report r = verify_cochain(rho, tol, prefix + ".cochain");
  r.add(sweep(prefix + ".covariance", "at_xi(rho_x) = kappa(x,xi)* rho_x", {n, nt}, tol, [&](auto t) {
    return residual(gt.apply(t[1], rho(t[0])), alg.multiply(alg.adjoint(kappa[t[0] * nt + t[1]]), rho(t[0])));
  }));
  return r;
}

Report check_Gtilde_particular(const TwistedAction& g, const OneCochain& rhot, const std::vector<Vec>& kappa,
                               double tol, const std::string& prefix) {
  const auto& alg = *rhot.algebra;
  const std::size_t n = g.order(), nt = rhot.group->order();
  if (kappa.size() != n * nt) throw InputError("coupling table is incomplete");
  Report r = verify_cochain(rhot, tol, prefix + ".cochain");
  r.add(sweep(prefix + ".covariance", "a_x(rhot_xi) = kappa(x,xi) rhot_xi", {n, nt}, tol, [&](auto t) {
    return residual(g.apply(t[0], rhot(t[1])), alg.multiply(kappa[t[0] * nt + t[1]], rhot(t[1])));
  }));
  return r;
}

CovariantStructure from_G_cochain(const OneCochain& rho, TwistedAction gt, std::vector<Vec> kappa, double tol) {
  if (gt.algebra != rho.algebra) throw InputError("from_G_cochain: carrier mismatch");
  require(check_G_particular(gt, rho, kappa, tol), "from_G_cochain");
  return verify_covariant(make_semi_covariant(inner_action(rho, tol), std::move(gt), std::move(kappa)), tol);
}

CovariantStructure from_Gtilde_cochain(const OneCochain& rhot, TwistedAction g, std::vector<Vec> kappa, double tol) {
  if (g.algebra != rhot.algebra) throw InputError("from_Gtilde_cochain: carrier mismatch");
  require(check_Gtilde_particular(g, rhot, kappa, tol), "from_Gtilde_cochain");
  return verify_covariant(make_semi_covariant(std::move(g), inner_action(rhot, tol), std::move(kappa)), tol);
}

}  // namespace workbench

#include "workbench/generations.hpp"

namespace workbench {

namespace {

Eigen::Index seg(std::size_t block, std::size_t d) { return static_cast<Eigen::Index>(block * d); }

}  // namespace

FirstGeneration first_generation_G(const CovariantStructure& cs, double tol) {
  auto Bp = crossed_product(cs.g());
  const auto& B = *Bp;
  const auto& A = *cs.algebra();
  const auto& G = cs.g().group;
  const std::size_t n = cs.G().order(), nt = cs.Gt().order(), d = A.dim();
  const std::size_t e = cs.G().identity();

  OneCochain lambda{G, Bp, {}};
  for (std::size_t x = 0; x < n; ++x) lambda.values.push_back(B.point_mass(x, A.unit()));

  std::vector<StarAutomorphism> bmaps;
  for (std::size_t x = 0; x < n; ++x) bmaps.push_back(ad(Bp, lambda(x), tol));
  std::vector<Vec> beta(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) beta[x * n + y] = B.point_mass(e, cs.g().alpha(x, y));

  std::vector<StarAutomorphism> btmaps;
  for (std::size_t xi = 0; xi < nt; ++xi)
    btmaps.push_back(StarAutomorphism::from_map(Bp, [&](const Vec& f) {
      Vec out = B.zero();
      for (std::size_t y = 0; y < n; ++y)
        out.segment(seg(y, d), static_cast<Eigen::Index>(d)) =
            A.multiply(cs.gt().apply(xi, B.slice(f, y)), A.adjoint(cs.kappa(y, xi)));
      return out;
    }));
  std::vector<Vec> betat(nt * nt);
  for (std::size_t xi = 0; xi < nt; ++xi)
    for (std::size_t eta = 0; eta < nt; ++eta) betat[xi * nt + eta] = B.point_mass(e, cs.gt().alpha(xi, eta));

  std::vector<Vec> k(n * nt);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < nt; ++xi) k[x * nt + xi] = B.point_mass(e, cs.kappa(x, xi));

  auto s = make_semi_covariant(make_twisted_action(G, Bp, std::move(bmaps), std::move(beta)),
                               make_twisted_action(cs.gt().group, Bp, std::move(btmaps), std::move(betat)),
                               std::move(k));
  return FirstGeneration{Bp, verify_covariant(std::move(s), tol), std::move(lambda)};
}

FirstGeneration first_generation_Gtilde(const CovariantStructure& cs, double tol) {
  auto Cp = crossed_product(cs.gt());
  const auto& C = *Cp;
  const auto& A = *cs.algebra();
  const auto& Gt = cs.gt().group;
  const std::size_t n = cs.G().order(), nt = cs.Gt().order(), d = A.dim();
  const std::size_t eps = cs.Gt().identity();

  OneCochain rhot{Gt, Cp, {}};
  for (std::size_t xi = 0; xi < nt; ++xi) rhot.values.push_back(C.point_mass(xi, A.unit()));

  std::vector<StarAutomorphism> cmaps;
  for (std::size_t x = 0; x < n; ++x)
    cmaps.push_back(StarAutomorphism::from_map(Cp, [&](const Vec& f) {
      Vec out = C.zero();
      for (std::size_t zeta = 0; zeta < nt; ++zeta)
        out.segment(seg(zeta, d), static_cast<Eigen::Index>(d)) =
            A.multiply(cs.g().apply(x, C.slice(f, zeta)), cs.kappa(x, zeta));
      return out;
    }));
  std::vector<Vec> gamma(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) gamma[x * n + y] = C.point_mass(eps, cs.g().alpha(x, y));

  std::vector<StarAutomorphism> ctmaps;
  for (std::size_t xi = 0; xi < nt; ++xi) ctmaps.push_back(ad(Cp, rhot(xi), tol));
  std::vector<Vec> gammat(nt * nt);
  for (std::size_t xi = 0; xi < nt; ++xi)
    for (std::size_t eta = 0; eta < nt; ++eta) gammat[xi * nt + eta] = C.point_mass(eps, cs.gt().alpha(xi, eta));

  // Coupling delta_eps (x) kappa: this is the sign for which c_x(delta_xi (x) 1) = kt(x,xi) (delta_xi (x) 1).
  std::vector<Vec> kt(n * nt);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < nt; ++xi) kt[x * nt + xi] = C.point_mass(eps, cs.kappa(x, xi));

  auto s = make_semi_covariant(make_twisted_action(cs.g().group, Cp, std::move(cmaps), std::move(gamma)),
                               make_twisted_action(Gt, Cp, std::move(ctmaps), std::move(gammat)), std::move(kt));
  return FirstGeneration{Cp, verify_covariant(std::move(s), tol), std::move(rhot)};
}

Report check_first_generation_G(const CovariantStructure& cs, const FirstGeneration& fg, double tol) {
  const auto& B = *fg.algebra;
  const auto& A = *cs.algebra();
  const auto& st = fg.structure;
  const std::size_t n = cs.G().order(), nt = cs.Gt().order(), d = A.dim();
  const std::size_t e = cs.G().identity();
  Report r = check_G_particular(st.gt(), fg.cochain, st.data().coupling, tol, "first_G.particular");
  r.add(sweep("first_G.cocycle_amplified", "lambda_x lambda_y lambda_xy* = delta_e (x) alpha(x,y) = beta(x,y)", {n, n},
              tol, [&](auto t) {
                const auto& lam = fg.cochain;
                Vec prod = B.multiply(B.multiply(lam(t[0]), lam(t[1])), B.adjoint(lam(cs.G().mul(t[0], t[1]))));
                Vec amp = B.point_mass(e, cs.g().alpha(t[0], t[1]));
                return std::max(residual(prod, amp), residual(st.g().alpha(t[0], t[1]), amp));
              }));
  r.add(sweep("first_G.cocycle_tilde_amplified", "betat(xi,eta) = delta_e (x) alphat(xi,eta)", {nt, nt}, tol,
              [&](auto t) { return residual(st.gt().alpha(t[0], t[1]), B.point_mass(e, cs.gt().alpha(t[0], t[1]))); }));
  r.add(sweep("first_G.lambda_law", "lambda_x lambda_y = (delta_e (x) alpha(x,y)) lambda_xy", {n, n}, tol, [&](auto t) {
    const auto& lam = fg.cochain;
    return residual(B.multiply(lam(t[0]), lam(t[1])),
                    B.multiply(B.point_mass(e, cs.g().alpha(t[0], t[1])), lam(cs.G().mul(t[0], t[1]))));
  }));
  r.add(sweep("first_G.lemma_b", "b_x(delta_e (x) m) = delta_e (x) a_x(m)", {n, d}, tol, [&](auto t) {
    Vec m = A.basis(t[1]);
    return residual(st.g().apply(t[0], B.point_mass(e, m)), B.point_mass(e, cs.g().apply(t[0], m)));
  }));
  r.add(sweep("first_G.lemma_bt", "bt_xi(delta_e (x) m) = delta_e (x) at_xi(m)", {nt, d}, tol, [&](auto t) {
    Vec m = A.basis(t[1]);
    return residual(st.gt().apply(t[0], B.point_mass(e, m)), B.point_mass(e, cs.gt().apply(t[0], m)));
  }));
  return r;
}

Report check_first_generation_Gtilde(const CovariantStructure& cs, const FirstGeneration& fg, double tol) {
  const auto& C = *fg.algebra;
  const auto& A = *cs.algebra();
  const auto& st = fg.structure;
  const std::size_t n = cs.G().order(), nt = cs.Gt().order(), d = A.dim();
  const std::size_t eps = cs.Gt().identity();
  Report r = check_Gtilde_particular(st.g(), fg.cochain, st.data().coupling, tol, "first_Gt.particular");
  r.add(sweep("first_Gt.cocycle_amplified", "gamma(x,y) = delta_eps (x) alpha(x,y)", {n, n}, tol,
              [&](auto t) { return residual(st.g().alpha(t[0], t[1]), C.point_mass(eps, cs.g().alpha(t[0], t[1]))); }));
  r.add(sweep("first_Gt.cocycle_tilde_amplified",
              "rt_xi rt_eta rt_{xi eta}* = delta_eps (x) alphat(xi,eta) = gammat(xi,eta)", {nt, nt}, tol, [&](auto t) {
                const auto& rt = fg.cochain;
                Vec prod = C.multiply(C.multiply(rt(t[0]), rt(t[1])), C.adjoint(rt(cs.Gt().mul(t[0], t[1]))));
                Vec amp = C.point_mass(eps, cs.gt().alpha(t[0], t[1]));
                return std::max(residual(prod, amp), residual(st.gt().alpha(t[0], t[1]), amp));
              }));
  r.add(sweep("first_Gt.lemma_c", "c_x(delta_eps (x) m) = delta_eps (x) a_x(m)", {n, d}, tol, [&](auto t) {
    Vec m = A.basis(t[1]);
    return residual(st.g().apply(t[0], C.point_mass(eps, m)), C.point_mass(eps, cs.g().apply(t[0], m)));
  }));
  r.add(sweep("first_Gt.lemma_ct", "ct_xi(delta_eps (x) m) = delta_eps (x) at_xi(m)", {nt, d}, tol, [&](auto t) {
    Vec m = A.basis(t[1]);
    return residual(st.gt().apply(t[0], C.point_mass(eps, m)), C.point_mass(eps, cs.gt().apply(t[0], m)));
  }));
  return r;
}

GenerationBundle build_bundle(const CovariantStructure& cs, double tol) {
  auto B = first_generation_G(cs, tol);
  auto C = first_generation_Gtilde(cs, tol);
  auto BGt = crossed_product(B.structure.gt());
  auto CG = crossed_product(C.structure.g());
  auto fwd = crossed_product(forward_action(cs));
  auto bwd = crossed_product(backward_action(cs));
  return GenerationBundle{cs, std::move(B), std::move(C), std::move(BGt), std::move(CG), std::move(fwd), std::move(bwd)};
}

namespace {

// Copies A-valued slots between layouts, optionally right-multiplying by kappa(x,xi).
Mat reshuffle(const GenerationBundle& b, bool source_xi_major, bool target_xi_major, bool with_kappa) {
  const auto& cs = b.cs;
  const auto& A = *cs.algebra();
  const std::size_t n = cs.G().order(), nt = cs.Gt().order(), d = A.dim();
  const auto N = static_cast<Eigen::Index>(n * nt * d);
  Mat m = Mat::Zero(N, N);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < nt; ++xi) {
      const std::size_t src = source_xi_major ? xi * n + x : x * nt + xi;
      const std::size_t dst = target_xi_major ? xi * n + x : x * nt + xi;
      for (std::size_t i = 0; i < d; ++i) {
        Vec v = with_kappa ? A.multiply(A.basis(i), cs.kappa(x, xi)) : A.basis(i);
        m.block(static_cast<Eigen::Index>(dst * d), static_cast<Eigen::Index>(src * d + i), static_cast<Eigen::Index>(d), 1) = v;
      }
    }
  return m;
}

}  // namespace

StarIsomorphism iso_gamma(const GenerationBundle& b, double tol) {
  return StarIsomorphism(b.backward, b.forward, reshuffle(b, false, false, true), "gamma", tol);
}

StarIsomorphism iso_upsilon(const GenerationBundle& b, double tol) {
  return StarIsomorphism(b.BGt, b.CG, reshuffle(b, true, false, true), "upsilon", tol);
}

StarIsomorphism iso_phi(const GenerationBundle& b, double tol) {
  return StarIsomorphism(b.BGt, b.backward, reshuffle(b, true, false, false), "phi", tol);
}

StarIsomorphism iso_psi(const GenerationBundle& b, double tol) {
  return StarIsomorphism(b.CG, b.forward, reshuffle(b, false, false, false), "psi", tol);
}

namespace {

struct ProductView {
  const CovariantStructure& cs;
  std::size_t n, nt, d;
  Vec at(const Vec& F, std::size_t x, std::size_t xi) const {
    return F.segment(static_cast<Eigen::Index>((x * nt + xi) * d), static_cast<Eigen::Index>(d));
  }
  void add(Vec& F, std::size_t x, std::size_t xi, const Vec& v) const {
    F.segment(static_cast<Eigen::Index>((x * nt + xi) * d), static_cast<Eigen::Index>(d)) += v;
  }
  bool zero(const Vec& F, std::size_t x, std::size_t xi) const {
    auto s = F.segment(static_cast<Eigen::Index>((x * nt + xi) * d), static_cast<Eigen::Index>(d));
    for (const auto& c : s)
      if (c != Complex(0.0)) return false;
    return true;
  }
};

ProductView view(const CovariantStructure& cs) {
  return ProductView{cs, cs.G().order(), cs.Gt().order(), cs.algebra()->dim()};
}

}  // namespace

Vec forward_law_product(const CovariantStructure& cs, const Vec& F, const Vec& Gv) {
  const auto v = view(cs);
  const auto& A = *cs.algebra();
  const auto& G = cs.G();
  const auto& Gt = cs.Gt();
  const auto& a = cs.g();
  const auto& at = cs.gt();
  Vec out = Vec::Zero(F.size());
  // (y,eta) runs over the support of F, (z,zeta) = (y^-1 x, eta^-1 xi) over the support of G.
  for (std::size_t y = 0; y < v.n; ++y)
    for (std::size_t eta = 0; eta < v.nt; ++eta) {
      if (v.zero(F, y, eta)) continue;
      for (std::size_t z = 0; z < v.n; ++z)
        for (std::size_t zeta = 0; zeta < v.nt; ++zeta) {
          if (v.zero(Gv, z, zeta)) continue;
          const std::size_t x = G.mul(y, z), xi = Gt.mul(eta, zeta);
          Vec t = A.multiply(v.at(F, y, eta), at.apply(eta, a.apply(y, v.at(Gv, z, zeta))));
          t = A.multiply(t, at.apply(eta, cs.kappa(y, zeta)));
          t = A.multiply(t, at.alpha(eta, zeta));
          t = A.multiply(t, at.apply(xi, a.alpha(y, z)));
          v.add(out, x, xi, t);
        }
    }
  return out;
}

Vec forward_law_involution(const CovariantStructure& cs, const Vec& F) {
  const auto v = view(cs);
  const auto& A = *cs.algebra();
  const auto& G = cs.G();
  const auto& Gt = cs.Gt();
  Vec out = Vec::Zero(F.size());
  for (std::size_t x = 0; x < v.n; ++x)
    for (std::size_t xi = 0; xi < v.nt; ++xi) {
      const std::size_t xin = G.inv(x), xiin = Gt.inv(xi);
      Vec t = A.multiply(A.adjoint(cs.g().alpha(x, xin)), A.adjoint(cs.gt().alpha(xi, xiin)));
      t = A.multiply(t, cs.gt().apply(xi, A.adjoint(cs.kappa(x, xiin))));
      t = A.multiply(t, cs.gt().apply(xi, cs.g().apply(x, A.adjoint(v.at(F, xin, xiin)))));
      v.add(out, x, xi, t);
    }
  return out;
}

Vec backward_law_product(const CovariantStructure& cs, const Vec& F, const Vec& Gv) {
  const auto v = view(cs);
  const auto& A = *cs.algebra();
  const auto& G = cs.G();
  const auto& Gt = cs.Gt();
  const auto& a = cs.g();
  const auto& at = cs.gt();
  Vec out = Vec::Zero(F.size());
  for (std::size_t y = 0; y < v.n; ++y)
    for (std::size_t eta = 0; eta < v.nt; ++eta) {
      if (v.zero(F, y, eta)) continue;
      for (std::size_t z = 0; z < v.n; ++z)
        for (std::size_t zeta = 0; zeta < v.nt; ++zeta) {
          if (v.zero(Gv, z, zeta)) continue;
          const std::size_t x = G.mul(y, z), xi = Gt.mul(eta, zeta);
          Vec t = A.multiply(v.at(F, y, eta), a.apply(y, at.apply(eta, v.at(Gv, z, zeta))));
          t = A.multiply(t, a.apply(y, A.adjoint(cs.kappa(z, eta))));
          t = A.multiply(t, a.alpha(y, z));
          t = A.multiply(t, a.apply(x, at.alpha(eta, zeta)));
          v.add(out, x, xi, t);
        }
    }
  return out;
}

Vec backward_law_involution(const CovariantStructure& cs, const Vec& F) {
  const auto v = view(cs);
  const auto& A = *cs.algebra();
  const auto& G = cs.G();
  const auto& Gt = cs.Gt();
  Vec out = Vec::Zero(F.size());
  for (std::size_t x = 0; x < v.n; ++x)
    for (std::size_t xi = 0; xi < v.nt; ++xi) {
      const std::size_t xin = G.inv(x), xiin = Gt.inv(xi);
      Vec t = A.multiply(A.adjoint(cs.gt().alpha(xi, xiin)), A.adjoint(cs.g().alpha(x, xin)));
      t = A.multiply(t, cs.g().apply(x, cs.kappa(xin, xi)));
      t = A.multiply(t, cs.g().apply(x, cs.gt().apply(xi, A.adjoint(v.at(F, xin, xiin)))));
      v.add(out, x, xi, t);
    }
  return out;
}

Report check_composition_laws(const GenerationBundle& b, double tol) {
  Report r;
  const auto& fwd = *b.forward;
  const auto& bwd = *b.backward;
  const std::size_t N = fwd.dim();
  r.add(sweep("laws.forward_product", "closed-form forward product = generic convolution", {N, N}, tol, [&](auto t) {
    return residual(forward_law_product(b.cs, fwd.basis(t[0]), fwd.basis(t[1])), fwd.convolve(fwd.basis(t[0]), fwd.basis(t[1])));
  }));
  r.add(sweep("laws.forward_involution", "closed-form forward involution = generic involution", {N}, tol, [&](auto t) {
    return residual(forward_law_involution(b.cs, fwd.basis(t[0])), fwd.involute(fwd.basis(t[0])));
  }));
  r.add(sweep("laws.backward_product", "closed-form backward product = generic convolution", {N, N}, tol, [&](auto t) {
    return residual(backward_law_product(b.cs, bwd.basis(t[0]), bwd.basis(t[1])), bwd.convolve(bwd.basis(t[0]), bwd.basis(t[1])));
  }));
  r.add(sweep("laws.backward_involution", "closed-form backward involution = generic involution", {N}, tol, [&](auto t) {
    return residual(backward_law_involution(b.cs, bwd.basis(t[0])), bwd.involute(bwd.basis(t[0])));
  }));
  return r;
}

Report check_isomorphisms(const GenerationBundle& b, double tol) {
  Report r;
  const std::size_t expect = b.cs.G().order() * b.cs.Gt().order() * b.cs.algebra()->dim();
  const bool dims = b.BGt->dim() == expect && b.CG->dim() == expect && b.forward->dim() == expect &&
                    b.backward->dim() == expect;
  r.add(single("bundle.dimensions", "all four algebras have dimension |G||Gt| dim A", dims ? 0.0 : 1.0, tol));
  auto g = iso_gamma(b, tol), u = iso_upsilon(b, tol), p = iso_phi(b, tol), s = iso_psi(b, tol);
  for (const auto* iso : {&g, &u, &p, &s}) r.merge(iso->certificate());
  r.add(single("bundle.diagram", "psi o upsilon = gamma o phi",
               residual(Mat(s.matrix() * u.matrix()), Mat(g.matrix() * p.matrix())), tol));
  return r;
}

}  // namespace workbench

#include "workbench/representations.hpp"

namespace workbench {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

Mat identity(std::size_t n) { return Mat::Identity(ix(n), ix(n)); }

}  // namespace

Report verify_twisted_pair(const TwistedAction& ta, const TwistedPair& p, double tol, const std::string& prefix) {
  const auto& G = *ta.group;
  const std::size_t n = G.order(), d = ta.algebra->dim(), N = p.pi.hilbert_dim();
  Report r = p.pi.verify(tol, prefix + ".pi");
  r.add(sweep(prefix + ".unitary", "U_x* U_x = 1", {n}, tol,
              [&](auto t) { return residual(Mat(p.U[t[0]].adjoint() * p.U[t[0]]), identity(N)); }));
  r.add(sweep(prefix + ".cocycle", "U_x U_y = pi[alpha(x,y)] U_xy", {n, n}, tol, [&](auto t) {
    return residual(Mat(p.U[t[0]] * p.U[t[1]]), Mat(p.pi(ta.alpha(t[0], t[1])) * p.U[G.mul(t[0], t[1])]));
  }));
  r.add(sweep(prefix + ".covariance", "U_x pi(m) U_x* = pi[a_x m]", {n, d}, tol, [&](auto t) {
    return residual(Mat(p.U[t[0]] * p.pi.image(t[1]) * p.U[t[0]].adjoint()),
                    p.pi(ta.apply(t[0], ta.algebra->basis(t[1]))));
  }));
  return r;
}

Representation integrated_form(const CrossedProductPtr& cp, const TwistedPair& p) {
  const std::size_t n = cp->group()->order(), d = cp->base()->dim();
  std::vector<Mat> images;
  images.reserve(n * d);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < d; ++i) images.push_back(p.pi.image(i) * p.U[z]);
  return Representation(cp, std::move(images));
}

TwistedPair regular_pair(const TwistedAction& ta, const Representation& varpi) {
  const auto& G = *ta.group;
  const auto& A = *ta.algebra;
  const std::size_t n = G.order(), k = varpi.hilbert_dim();
  std::vector<Mat> pi;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Mat m = Mat::Zero(ix(n * k), ix(n * k));
    for (std::size_t x = 0; x < n; ++x) m.block(ix(x * k), ix(x * k), ix(k), ix(k)) = varpi(ta.apply(x, A.basis(i)));
    pi.push_back(std::move(m));
  }
  std::vector<Mat> U;
  for (std::size_t z = 0; z < n; ++z) {
    Mat m = Mat::Zero(ix(n * k), ix(n * k));
    for (std::size_t x = 0; x < n; ++x) m.block(ix(x * k), ix(G.mul(x, z) * k), ix(k), ix(k)) = varpi(ta.alpha(x, z));
    U.push_back(std::move(m));
  }
  return TwistedPair{Representation(ta.algebra, std::move(pi)), std::move(U)};
}

Report verify_covariant_rep(const CovariantStructure& cs, const CovariantRep& cr, double tol,
                            const std::string& prefix) {
  Report r = verify_twisted_pair(cs.g(), TwistedPair{cr.pi, cr.U}, tol, prefix + ".U");
  r.merge(verify_twisted_pair(cs.gt(), TwistedPair{cr.pi, cr.V}, tol, prefix + ".V"));
  r.add(sweep(prefix + ".commutation", "U_x V_xi = pi[kappa(x,xi)] V_xi U_x", {cs.G().order(), cs.Gt().order()}, tol,
              [&](auto t) {
                return residual(Mat(cr.U[t[0]] * cr.V[t[1]]), Mat(cr.pi(cs.kappa(t[0], t[1])) * cr.V[t[1]] * cr.U[t[0]]));
              }));
  return r;
}

CovariantRep induce(const CovariantStructure& cs, const Representation& varpi) {
  if (!varpi.faithful()) throw InputError("induced representation needs a faithful varpi");
  const auto& A = *cs.algebra();
  const auto& G = cs.G();
  const auto& Gt = cs.Gt();
  const std::size_t n = G.order(), nt = Gt.order(), k = varpi.hilbert_dim(), N = n * nt * k;
  auto slot = [&](std::size_t x, std::size_t xi) { return ix((x * nt + xi) * k); };
  const auto K = ix(k);

  std::vector<Mat> pi;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Mat m = Mat::Zero(ix(N), ix(N));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t xi = 0; xi < nt; ++xi)
        m.block(slot(x, xi), slot(x, xi), K, K) = varpi(cs.gt().apply(xi, cs.g().apply(x, A.basis(i))));
    pi.push_back(std::move(m));
  }
  // U_e and V_eps are exactly 1 by normalization; evaluating at_xi[1] would only add rounding.
  std::vector<Mat> U;
  for (std::size_t z = 0; z < n; ++z) {
    Mat m = Mat::Zero(ix(N), ix(N));
    if (z == G.identity()) {
      U.push_back(identity(N));
      continue;
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t xi = 0; xi < nt; ++xi)
        m.block(slot(x, xi), slot(G.mul(x, z), xi), K, K) = varpi(cs.gt().apply(xi, cs.g().alpha(x, z)));
    U.push_back(std::move(m));
  }
  std::vector<Mat> V;
  for (std::size_t zeta = 0; zeta < nt; ++zeta) {
    Mat m = Mat::Zero(ix(N), ix(N));
    if (zeta == Gt.identity()) {
      V.push_back(identity(N));
      continue;
    }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t xi = 0; xi < nt; ++xi)
        m.block(slot(x, xi), slot(x, Gt.mul(xi, zeta)), K, K) =
            varpi(A.multiply(cs.gt().apply(xi, cs.kappa(x, zeta)), cs.gt().alpha(xi, zeta)));
    V.push_back(std::move(m));
  }
  return CovariantRep{Representation(cs.algebra(), std::move(pi)), std::move(U), std::move(V)};
}

ProductReps to_product_rep(const CovariantStructure& cs, const CovariantRep& cr) {
  const std::size_t n = cs.G().order(), nt = cs.Gt().order();
  const std::size_t e = cs.G().identity(), eps = cs.Gt().identity();
  std::vector<Mat> W, Wp;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < nt; ++xi) {
      // U_e = V_eps = 1, so the axis slots are copied rather than multiplied; this keeps
      // from_product_rep o to_product_rep exact in floating point.
      if (x == e && xi == eps) {
        W.push_back(identity(cr.hilbert_dim()));
        Wp.push_back(identity(cr.hilbert_dim()));
      } else if (xi == eps) {
        W.push_back(cr.U[x]);
        Wp.push_back(cr.U[x]);
      } else if (x == e) {
        W.push_back(cr.V[xi]);
        Wp.push_back(cr.V[xi]);
      } else {
        W.push_back(cr.V[xi] * cr.U[x]);
        Wp.push_back(cr.U[x] * cr.V[xi]);
      }
    }
  return ProductReps{TwistedPair{cr.pi, std::move(W)}, TwistedPair{cr.pi, std::move(Wp)}};
}

CovariantRep from_product_rep(const CovariantStructure& cs, const TwistedPair& forward) {
  const auto& P = *cs.product_group();
  const std::size_t e = cs.G().identity(), eps = cs.Gt().identity();
  std::vector<Mat> U, V;
  for (std::size_t x = 0; x < cs.G().order(); ++x) U.push_back(forward.U[P.pair(x, eps)]);
  for (std::size_t xi = 0; xi < cs.Gt().order(); ++xi) V.push_back(forward.U[P.pair(e, xi)]);
  return CovariantRep{forward.pi, std::move(U), std::move(V)};
}

Representation double_integrated(const GenerationBundle& b, const CovariantRep& cr) {
  const std::size_t n = b.cs.G().order(), nt = b.cs.Gt().order(), d = b.cs.algebra()->dim();
  std::vector<Mat> images;
  images.reserve(n * nt * d);
  for (std::size_t xi = 0; xi < nt; ++xi)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < d; ++i) images.push_back(cr.pi.image(i) * cr.U[x] * cr.V[xi]);
  return Representation(b.BGt, std::move(images));
}

Representation double_integrated_CG(const GenerationBundle& b, const CovariantRep& cr) {
  const std::size_t n = b.cs.G().order(), nt = b.cs.Gt().order(), d = b.cs.algebra()->dim();
  std::vector<Mat> images;
  images.reserve(n * nt * d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < nt; ++xi)
      for (std::size_t i = 0; i < d; ++i) images.push_back(cr.pi.image(i) * cr.V[xi] * cr.U[x]);
  return Representation(b.CG, std::move(images));
}

Report check_correspondence(const GenerationBundle& b, const CovariantRep& cr, double tol) {
  auto reps = to_product_rep(b.cs, cr);
  auto R = double_integrated(b, cr);
  auto Rc = double_integrated_CG(b, cr);
  auto Rf = integrated_form(b.forward, reps.forward);
  auto Rb = integrated_form(b.backward, reps.backward);
  Report r = R.verify(tol, "double.BGt");
  r.merge(Rc.verify(tol, "double.CG"));
  r.merge(Rf.verify(tol, "integrated.forward"));
  r.merge(Rb.verify(tol, "integrated.backward"));
  auto gamma = iso_gamma(b, tol), upsilon = iso_upsilon(b, tol), phi = iso_phi(b, tol), psi = iso_psi(b, tol);
  const std::size_t N = b.BGt->dim();
  r.add(sweep("correspondence.phi", "R = (pi x| W') o Phi", {N}, tol,
              [&](auto t) { return residual(R.image(t[0]), Rb(phi(b.BGt->basis(t[0])))); }));
  r.add(sweep("correspondence.upsilon", "R = (pi x| W) o Psi o Upsilon", {N}, tol,
              [&](auto t) { return residual(R.image(t[0]), Rf(psi(upsilon(b.BGt->basis(t[0]))))); }));
  r.add(sweep("correspondence.psi", "R_CG = (pi x| W) o Psi", {N}, tol,
              [&](auto t) { return residual(Rc.image(t[0]), Rf(psi(b.CG->basis(t[0])))); }));
  r.add(sweep("correspondence.gamma", "pi x| W' = (pi x| W) o Gamma", {N}, tol,
              [&](auto t) { return residual(Rb.image(t[0]), Rf(gamma(b.backward->basis(t[0])))); }));
  return r;
}

}  // namespace workbench

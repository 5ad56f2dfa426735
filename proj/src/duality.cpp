#include "workbench/duality.hpp"

#include <Eigen/SVD>
#include <sstream>

namespace workbench {

namespace {

Eigen::Index ix(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

CovariantStructure standard_structure(const TwistedAction& ta, double tol) {
  const auto& G = *ta.group;
  if (!G.is_abelian()) throw InputError("standard structure needs an abelian group");
  DualGroup d = dual(ta.group);
  const auto& A = *ta.algebra;
  const std::size_t n = G.order(), nt = d.order();
  std::vector<Vec> kappa(n * nt);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xi = 0; xi < nt; ++xi) kappa[x * nt + xi] = pairing(G, x, xi) * A.unit();
  return verify_covariant(make_semi_covariant(ta, trivial_action(d.group, ta.algebra), std::move(kappa)), tol);
}

TwistedAction dual_action(const CrossedProductPtr& cp, const GroupPtr& characters) {
  const auto& G = *cp->group();
  std::vector<StarAutomorphism> maps;
  for (std::size_t xi = 0; xi < characters->order(); ++xi)
    maps.push_back(StarAutomorphism::from_map(cp, [&](const Vec& f) {
      Vec out = f;
      for (std::size_t x = 0; x < G.order(); ++x) cp->set_slice(out, x, cp->slice(f, x) * std::conj(pairing(G, x, xi)));
      return out;
    }));
  return untwisted_action(characters, cp, std::move(maps));
}

Report check_dual_action(const CovariantStructure& standard, double tol) {
  auto fg = first_generation_G(standard, tol);
  auto b = dual_action(fg.algebra, standard.gt().group);
  const auto& bt = fg.structure.gt();
  const std::size_t nt = standard.Gt().order(), N = fg.algebra->dim();
  Report r;
  r.add(sweep("dual.maps", "b_xi = first-generation bt_xi", {nt, N}, tol, [&](auto t) {
    Vec e = fg.algebra->basis(t[1]);
    return residual(bt.apply(t[0], e), b.apply(t[0], e));
  }));
  r.add(sweep("dual.cocycle", "first-generation betat = 1", {nt, nt}, tol,
              [&](auto t) { return residual(bt.alpha(t[0], t[1]), b.alpha(t[0], t[1])); }));
  return r;
}

std::shared_ptr<const MatrixDirectSum> function_algebra(std::size_t n) {
  return direct_sum(std::vector<std::size_t>(n, 1));
}

TwistedAction translation_action(const GroupPtr& g, const AlgebraPtr& cg) {
  const std::size_t n = g->order();
  std::vector<StarAutomorphism> maps;
  for (std::size_t x = 0; x < n; ++x) {
    // t_x delta_y = delta_{y x^-1}
    Mat m = Mat::Zero(ix(n), ix(n));
    for (std::size_t y = 0; y < n; ++y) m(ix(g->mul(y, g->inv(x))), ix(y)) = 1.0;
    maps.push_back(StarAutomorphism::from_matrix(cg, std::move(m)));
  }
  return untwisted_action(g, cg, std::move(maps));
}

TwistedAction tensor_translation_action(const TwistedAction& ta, const AlgebraPtr& a_cg) {
  const auto& T = dynamic_cast<const TensorProduct&>(*a_cg);
  auto t = translation_action(ta.group, T.right());
  const std::size_t n = ta.order();
  std::vector<StarAutomorphism> maps;
  for (std::size_t x = 0; x < n; ++x)
    maps.push_back(StarAutomorphism::from_matrix(a_cg, kron(ta.act(x).matrix(), t.act(x).matrix())));
  std::vector<Vec> cocycle;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) cocycle.push_back(T.elementary(ta.alpha(x, y), T.right()->unit()));
  return make_twisted_action(ta.group, a_cg, std::move(maps), std::move(cocycle));
}

namespace {

Mat fourier_matrix(const FiniteGroup& g, std::size_t d) {
  // C index xi*d + i  ->  A (x) C(G) index i*n + y
  const std::size_t n = g.order();
  Mat m = Mat::Zero(ix(n * d), ix(n * d));
  for (std::size_t xi = 0; xi < n; ++xi)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t y = 0; y < n; ++y) m(ix(i * n + y), ix(xi * d + i)) = pairing(g, y, xi);
  return m;
}

}  // namespace

StarIsomorphism fourier_iso(const CrossedProductPtr& c, const AlgebraPtr& a_cg, const FiniteGroup& g, double tol) {
  return StarIsomorphism(c, a_cg, fourier_matrix(g, c->base()->dim()), "fourier", tol);
}

StarIsomorphism theta_iso(const CrossedProductPtr& source, const AlgebraPtr& target, const TwistedAction& ta,
                          double tol) {
  const auto& A = *ta.algebra;
  const std::size_t n = ta.order(), d = A.dim();
  // source index z*(d n) + i*n + x, target index j*n^2 + z*n + x
  Mat m = Mat::Zero(ix(n * n * d), ix(n * n * d));
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t x = 0; x < n; ++x) {
        Vec v = A.multiply(ta.apply(x, A.basis(i)), ta.alpha(x, z));
        for (std::size_t j = 0; j < d; ++j) m(ix(j * n * n + z * n + x), ix(z * d * n + i * n + x)) = v(ix(j));
      }
  return StarIsomorphism(source, target, std::move(m), "theta", tol);
}

namespace {

Mat stabilization_matrix(const FiniteGroup& g) {
  // delta_z (x) delta_x -> E_{x, xz}
  const std::size_t n = g.order();
  Mat m = Mat::Zero(ix(n * n), ix(n * n));
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t x = 0; x < n; ++x) m(ix(x * n + g.mul(x, z)), ix(z * n + x)) = 1.0;
  return m;
}

}  // namespace

StarIsomorphism stabilization_iso(const CrossedProductPtr& translation, double tol) {
  const auto& g = *translation->group();
  return StarIsomorphism(translation, matrix_algebra(g.order()), stabilization_matrix(g), "stabilization", tol);
}

Report TakaiChain::report() const {
  Report r;
  for (const auto& a : arrows) r.merge(a.certificate());
  r.merge(composite.certificate());
  r.merge(transport);
  const std::size_t n = cs.G().order(), d = cs.algebra()->dim(), expect = n * n * d;
  bool dims = bundle.BGt->dim() == expect && bundle.CG->dim() == expect && transported->dim() == expect &&
              theta_target->dim() == expect && final_algebra->dim() == expect;
  r.add(single("takai.dimensions", "every algebra in the chain has dimension |G|^2 dim A", dims ? 0.0 : 1.0, 0.5));
  return r;
}

TakaiChain takai_chain(const TwistedAction& ta, double tol) {
  auto cs = standard_structure(ta, tol);
  auto bundle = build_bundle(cs, tol);
  const auto& G = *ta.group;
  const std::size_t n = G.order(), d = ta.algebra->dim();

  auto cg = function_algebra(n);
  AlgebraPtr a_cg = tensor(ta.algebra, cg);
  auto transported = crossed_product(tensor_translation_action(ta, a_cg));
  auto translation = crossed_product(translation_action(ta.group, cg));
  AlgebraPtr theta_target = tensor(ta.algebra, translation);
  AlgebraPtr final_algebra = tensor(ta.algebra, matrix_algebra(n));

  // Transport of (c, gamma) through the Fourier transform on the base.
  const auto& c = bundle.C.structure.g();
  const auto& carried = transported->action();
  Mat F = fourier_matrix(G, d);
  Mat Finv = F.inverse();
  Report transport;
  transport.add(sweep("fourier.carried_action", "F c_x F^-1 = a_x (x) t_x", {n}, tol, [&](auto t) {
    return residual(Mat(F * c.act(t[0]).matrix() * Finv), carried.act(t[0]).matrix());
  }));
  transport.add(sweep("fourier.carried_cocycle", "F gamma(x,y) = alpha(x,y) (x) 1", {n, n}, tol, [&](auto t) {
    return residual(Vec(F * c.alpha(t[0], t[1])), carried.alpha(t[0], t[1]));
  }));

  std::vector<StarIsomorphism> arrows;
  arrows.push_back(iso_upsilon(bundle, tol));
  arrows.emplace_back(bundle.CG, transported, kron(Mat::Identity(ix(n), ix(n)), F), "fourier", tol);
  arrows.push_back(theta_iso(transported, theta_target, ta, tol));
  arrows.emplace_back(theta_target, final_algebra, kron(Mat::Identity(ix(d), ix(d)), stabilization_matrix(G)),
                      "stabilization", tol);
  Mat comp = arrows[3].matrix() * arrows[2].matrix() * arrows[1].matrix() * arrows[0].matrix();
  StarIsomorphism composite(bundle.BGt, final_algebra, std::move(comp), "takai", tol);
  return TakaiChain{std::move(cs),         std::move(bundle),        std::move(a_cg),     std::move(transported),
                    std::move(translation), std::move(theta_target), std::move(final_algebra), std::move(arrows),
                    std::move(composite),   std::move(transport)};
}

TwistedGroupAlgebra::TwistedGroupAlgebra(GroupPtr h, std::vector<Complex> sigma)
    : StarAlgebra(h->order()), h_(std::move(h)), sigma_(std::move(sigma)) {
  const std::size_t n = h_->order();
  if (sigma_.size() != n * n) throw InputError("twisted group algebra: sigma table has wrong size");
  std::vector<Mat> images;
  for (std::size_t g = 0; g < n; ++g) {
    Mat m = Mat::Zero(ix(n), ix(n));
    for (std::size_t k = 0; k < n; ++k) m(ix(h_->mul(g, k)), ix(k)) = this->sigma(g, k);
    images.push_back(std::move(m));
  }
  set_materialization(std::move(images));
}

Vec TwistedGroupAlgebra::unit() const { return basis(h_->identity()); }

std::string TwistedGroupAlgebra::describe() const {
  std::ostringstream os;
  os << "C*_sigma(H), |H| = " << h_->order();
  return os.str();
}

Vec TwistedGroupAlgebra::product(const Vec& a, const Vec& b) const {
  const std::size_t n = h_->order();
  Vec out = zero();
  for (std::size_t g = 0; g < n; ++g) {
    if (a(ix(g)) == Complex(0.0)) continue;
    for (std::size_t h = 0; h < n; ++h) out(ix(h_->mul(g, h))) += a(ix(g)) * b(ix(h)) * sigma(g, h);
  }
  return out;
}

Vec TwistedGroupAlgebra::involution(const Vec& a) const {
  Vec out = zero();
  for (std::size_t h = 0; h < h_->order(); ++h) {
    const std::size_t hi = h_->inv(h);
    out(ix(hi)) += std::conj(a(ix(h))) * std::conj(sigma(h, hi));
  }
  return out;
}

Report verify_scalar_cocycle(const FiniteGroup& h, const std::vector<Complex>& sigma, double tol) {
  const std::size_t n = h.order();
  if (sigma.size() != n * n) throw InputError("scalar cocycle table has wrong size");
  auto s = [&](std::size_t g, std::size_t k) { return sigma[g * n + k]; };
  const std::size_t e = h.identity();
  Report r;
  r.add(sweep("sigma.normalization", "sigma(x,e) = 1 = sigma(e,x)", {n}, tol, [&](auto t) {
    return std::max(std::abs(s(t[0], e) - 1.0), std::abs(s(e, t[0]) - 1.0));
  }));
  r.add(sweep("sigma.unitary", "|sigma(x,y)| = 1", {n, n}, tol,
              [&](auto t) { return std::abs(std::abs(s(t[0], t[1])) - 1.0); }));
  r.add(sweep("sigma.cocycle", "sigma(x,y) sigma(xy,z) = sigma(y,z) sigma(x,yz)", {n, n, n}, tol, [&](auto t) {
    const std::size_t x = t[0], y = t[1], z = t[2];
    return std::abs(s(x, y) * s(h.mul(x, y), z) - s(y, z) * s(x, h.mul(y, z)));
  }));
  return r;
}

std::shared_ptr<const TwistedGroupAlgebra> twisted_group_algebra(GroupPtr h, std::vector<Complex> sigma, double tol) {
  require(verify_scalar_cocycle(*h, sigma, tol), "twisted group algebra");
  return std::make_shared<const TwistedGroupAlgebra>(std::move(h), std::move(sigma));
}

std::size_t center_dimension(const StarAlgebra& alg, double tol) {
  const std::size_t N = alg.dim();
  Mat m = Mat::Zero(ix(N * N), ix(N));
  for (std::size_t k = 0; k < N; ++k) {
    Vec ek = alg.basis(k);
    for (std::size_t j = 0; j < N; ++j) {
      Vec ej = alg.basis(j);
      m.block(ix(j * N), ix(k), ix(N), 1) = alg.multiply(ek, ej) - alg.multiply(ej, ek);
    }
  }
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return N - rank;
}

Complex scalar_value(const StarAlgebra& alg, const Vec& v, double tol) {
  Vec one = alg.unit();
  Complex c = one.dot(v) / one.squaredNorm();
  if (residual(v, Vec(c * one)) > tol) throw InputError("value is not a scalar multiple of the unit");
  return c;
}

Factorization factorization(const CovariantStructure& cs, double tol) {
  const auto& A = cs.algebra();
  const std::size_t d = A->dim();
  auto fwd_action = forward_action(cs);
  const std::size_t m = fwd_action.order();
  Mat id = Mat::Identity(ix(d), ix(d));
  for (std::size_t X = 0; X < m; ++X)
    if (residual(fwd_action.act(X).matrix(), id) > tol)
      throw InputError("factorization needs trivial actions");
  std::vector<Complex> sigma;
  for (std::size_t X = 0; X < m; ++X)
    for (std::size_t Y = 0; Y < m; ++Y) sigma.push_back(scalar_value(*A, fwd_action.alpha(X, Y), tol));
  auto tga = twisted_group_algebra(fwd_action.group, std::move(sigma), tol);
  AlgebraPtr source = tensor(A, tga);
  auto fwd = crossed_product(std::move(fwd_action));
  Mat p = Mat::Zero(ix(m * d), ix(m * d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t h = 0; h < m; ++h) p(ix(h * d + i), ix(i * m + h)) = 1.0;
  StarIsomorphism iso(source, fwd, std::move(p), "factorization", tol);
  return Factorization{std::move(tga), std::move(source), std::move(fwd), std::move(iso)};
}

Report crossed_morphism_check(const SemiCovariantStructure& s, double tol) {
  const auto& A = *s.algebra();
  const auto& G = s.G();
  const auto& Gt = s.Gt();
  const std::size_t n = G.order(), nt = Gt.order();
  const Vec one = A.unit();
  Report r;
  r.add(sweep("crossed.untwisted_G", "alpha(x,y) = 1", {n, n}, tol,
              [&](auto t) { return residual(s.g.alpha(t[0], t[1]), one); }));
  r.add(sweep("crossed.untwisted_Gt", "alphat(xi,eta) = 1", {nt, nt}, tol,
              [&](auto t) { return residual(s.gt.alpha(t[0], t[1]), one); }));
  r.add(sweep("crossed.left", "kappa(x, xi eta) = kappa(x,xi) at_xi[kappa(x,eta)]", {n, nt, nt}, tol, [&](auto t) {
    const std::size_t x = t[0], xi = t[1], eta = t[2];
    return residual(s.kappa(x, Gt.mul(xi, eta)), A.multiply(s.kappa(x, xi), s.gt.apply(xi, s.kappa(x, eta))));
  }));
  r.add(sweep("crossed.right", "kappa(xy, xi)* = kappa(x,xi)* a_x[kappa(y,xi)*]", {n, n, nt}, tol, [&](auto t) {
    const std::size_t x = t[0], y = t[1], xi = t[2];
    return residual(A.adjoint(s.kappa(G.mul(x, y), xi)),
                    A.multiply(A.adjoint(s.kappa(x, xi)), s.g.apply(x, A.adjoint(s.kappa(y, xi)))));
  }));
  return r;
}

Report untwisted_product_cocycles(const CovariantStructure& cs, double tol) {
  const auto& A = *cs.algebra();
  auto fwd = forward_action(cs);
  auto bwd = backward_action(cs);
  const auto& P = *cs.product_group();
  const std::size_t m = P.order();
  Report r;
  r.add(sweep("untwisted.forward", "forward alpha((x,xi),(y,eta)) = at_xi[kappa(x,eta)]", {m, m}, tol, [&](auto t) {
    auto [x, xi] = P.split(t[0]);
    auto [y, eta] = P.split(t[1]);
    (void)y;
    return residual(fwd.alpha(t[0], t[1]), cs.gt().apply(xi, cs.kappa(x, eta)));
  }));
  r.add(sweep("untwisted.backward", "backward alpha((x,xi),(y,eta)) = a_x[kappa(y,xi)*]", {m, m}, tol, [&](auto t) {
    auto [x, xi] = P.split(t[0]);
    auto [y, eta] = P.split(t[1]);
    (void)eta;
    return residual(bwd.alpha(t[0], t[1]), cs.g().apply(x, A.adjoint(cs.kappa(y, xi))));
  }));
  return r;
}

bool forward_cocycle_symmetric(const CovariantStructure& cs, double tol) {
  auto fwd = forward_action(cs);
  const std::size_t m = fwd.order();
  return sweep("forward.symmetric", "", {m, m}, tol, [&](auto t) {
           return residual(fwd.alpha(t[0], t[1]), fwd.alpha(t[1], t[0]));
         }).pass;
}

bool symmetry_criterion(const CovariantStructure& cs, double tol) {
  const std::size_t n = cs.G().order(), nt = cs.Gt().order();
  const Vec one = cs.algebra()->unit();
  bool a = sweep("", "", {n, n}, tol, [&](auto t) {
             return residual(cs.g().alpha(t[0], t[1]), cs.g().alpha(t[1], t[0]));
           }).pass;
  bool at = sweep("", "", {nt, nt}, tol, [&](auto t) {
              return residual(cs.gt().alpha(t[0], t[1]), cs.gt().alpha(t[1], t[0]));
            }).pass;
  bool k = sweep("", "", {n, nt}, tol, [&](auto t) { return residual(cs.kappa(t[0], t[1]), one); }).pass;
  return a && at && k;
}

}  // namespace workbench

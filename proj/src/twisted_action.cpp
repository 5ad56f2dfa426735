#include "workbench/twisted_action.hpp"

#include <algorithm>

namespace workbench {

TwistedAction make_twisted_action(GroupPtr g, AlgebraPtr alg, std::vector<StarAutomorphism> maps,
                                  std::vector<Vec> cocycle) {
  const std::size_t n = g->order();
  if (maps.size() != n) throw InputError("twisted action needs one automorphism per group element");
  if (cocycle.size() != n * n) throw InputError("twisted action needs a cocycle value for every pair");
  for (const auto& m : maps)
    if (m.carrier() != alg) throw InputError("automorphism carrier differs from the acted-on algebra");
  for (const auto& c : cocycle)
    if (static_cast<std::size_t>(c.size()) != alg->dim()) throw InputError("cocycle value has wrong dimension");
  return TwistedAction{std::move(g), std::move(alg), std::move(maps), std::move(cocycle)};
}

TwistedAction trivial_action(GroupPtr g, AlgebraPtr alg) {
  std::vector<StarAutomorphism> maps(g->order(), StarAutomorphism::identity(alg));
  return untwisted_action(std::move(g), std::move(alg), std::move(maps));
}

TwistedAction untwisted_action(GroupPtr g, AlgebraPtr alg, std::vector<StarAutomorphism> maps) {
  std::vector<Vec> cocycle(g->order() * g->order(), alg->unit());
  return make_twisted_action(std::move(g), std::move(alg), std::move(maps), std::move(cocycle));
}

Report verify_twisted_action(const TwistedAction& ta, double tol, const std::string& prefix) {
  Report r;
  const auto& alg = *ta.algebra;
  const auto& g = *ta.group;
  const std::size_t n = g.order(), d = alg.dim();
  const std::size_t e = g.identity();
  const Vec one = alg.unit();
  const auto dd = static_cast<Eigen::Index>(d);

  r.add(single(prefix + ".identity", "a_e = id", residual(ta.act(e).matrix(), Mat(Mat::Identity(dd, dd))), tol));
  r.add(sweep(prefix + ".automorphism", "a_x(e_i e_j) = a_x(e_i) a_x(e_j), a_x(e_i*) = a_x(e_i)*", {n, d, d}, tol,
              [&](auto t) {
                const Mat& m = ta.act(t[0]).matrix();
                Vec ij = alg.multiply(alg.basis(t[1]), alg.basis(t[2]));
                double res = residual(Vec(m * ij), alg.multiply(m.col(t[1]), m.col(t[2])));
                if (t[2] == 0) res = std::max(res, residual(Vec(m * alg.adjoint(alg.basis(t[1]))), alg.adjoint(m.col(t[1]))));
                return res;
              }));
  r.add(sweep(prefix + ".cocycle_unitary", "alpha(x,y) unitary", {n, n}, tol,
              [&](auto t) { return unitary_residual(alg, ta.alpha(t[0], t[1])); }));
  r.add(sweep(prefix + ".normalization", "alpha(x,e) = 1 = alpha(e,x)", {n}, tol, [&](auto t) {
    return std::max(residual(ta.alpha(t[0], e), one), residual(ta.alpha(e, t[0]), one));
  }));
  r.add(sweep(prefix + ".composition", "a_x o a_y = ad alpha(x,y) o a_xy", {n, n}, tol, [&](auto t) {
    const Mat lhs = ta.act(t[0]).matrix() * ta.act(t[1]).matrix();
    const Mat& rhs = ta.act(g.mul(t[0], t[1])).matrix();
    const Vec& u = ta.alpha(t[0], t[1]);
    const Vec us = alg.adjoint(u);
    double res = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      res = std::max(res, residual(Vec(lhs.col(i)), alg.multiply(alg.multiply(u, rhs.col(i)), us)));
    return res;
  }));
  r.add(sweep(prefix + ".cocycle", "alpha(x,y) alpha(xy,z) = a_x[alpha(y,z)] alpha(x,yz)", {n, n, n}, tol,
              [&](auto t) {
                const std::size_t x = t[0], y = t[1], z = t[2];
                Vec lhs = alg.multiply(ta.alpha(x, y), ta.alpha(g.mul(x, y), z));
                Vec rhs = alg.multiply(ta.apply(x, ta.alpha(y, z)), ta.alpha(x, g.mul(y, z)));
                return residual(lhs, rhs);
              }));
  return r;
}

OneCochain trivial_cochain(GroupPtr g, AlgebraPtr alg) {
  std::vector<Vec> v(g->order(), alg->unit());
  return OneCochain{std::move(g), std::move(alg), std::move(v)};
}

Report verify_cochain(const OneCochain& q, double tol, const std::string& prefix) {
  Report r;
  if (q.values.size() != q.group->order()) throw InputError("cochain needs one value per group element");
  r.add(single(prefix + ".normalized", "q_e = 1", residual(q(q.group->identity()), q.algebra->unit()), tol));
  r.add(sweep(prefix + ".unitary", "q_x unitary", {q.group->order()}, tol,
              [&](auto t) { return unitary_residual(*q.algebra, q(t[0])); }));
  return r;
}

OneCochain inverse_cochain(const OneCochain& q) {
  OneCochain out{q.group, q.algebra, {}};
  for (const auto& v : q.values) out.values.push_back(q.algebra->adjoint(v));
  return out;
}

OneCochain cochain_product(const OneCochain& p, const OneCochain& q) {
  if (p.group != q.group || p.algebra != q.algebra) throw InputError("cochain_product: carrier mismatch");
  OneCochain out{p.group, p.algebra, {}};
  for (std::size_t x = 0; x < p.values.size(); ++x) out.values.push_back(p.algebra->multiply(p(x), q(x)));
  return out;
}

TwistedAction inner_action(const OneCochain& rho, double tol) {
  const auto& g = *rho.group;
  const auto& alg = *rho.algebra;
  const std::size_t n = g.order();
  std::vector<StarAutomorphism> maps;
  for (std::size_t x = 0; x < n; ++x) maps.push_back(ad(rho.algebra, rho(x), tol));
  std::vector<Vec> cocycle(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      cocycle[x * n + y] = alg.multiply(alg.multiply(rho(x), rho(y)), alg.adjoint(rho(g.mul(x, y))));
  return make_twisted_action(rho.group, rho.algebra, std::move(maps), std::move(cocycle));
}

TwistedAction exterior_transform(const TwistedAction& b, const OneCochain& q, double tol) {
  if (q.group != b.group || q.algebra != b.algebra) throw InputError("exterior_transform: cochain carrier mismatch");
  const auto& g = *b.group;
  const auto& alg = *b.algebra;
  const std::size_t n = g.order();
  std::vector<StarAutomorphism> maps;
  for (std::size_t x = 0; x < n; ++x) maps.push_back(ad(b.algebra, q(x), tol).compose(b.act(x)));
  std::vector<Vec> cocycle(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec v = alg.multiply(q(x), b.apply(x, q(y)));
      v = alg.multiply(alg.multiply(v, b.alpha(x, y)), alg.adjoint(q(g.mul(x, y))));
      cocycle[x * n + y] = std::move(v);
    }
  return make_twisted_action(b.group, b.algebra, std::move(maps), std::move(cocycle));
}

Report check_exterior_equivalence(const TwistedAction& b, const TwistedAction& b2, const OneCochain& q,
                                  double tol, const std::string& prefix) {
  if (b.group->order() != b2.group->order() || b.algebra != b2.algebra || q.algebra != b.algebra ||
      q.values.size() != b.group->order())
    throw InputError("check_exterior_equivalence: carrier mismatch");
  Report r = verify_cochain(q, tol, prefix + ".cochain");
  const auto& g = *b.group;
  const auto& alg = *b.algebra;
  const std::size_t n = g.order(), d = alg.dim();
  r.add(sweep(prefix + ".action", "b'_x = ad(q_x) o b_x", {n}, tol, [&](auto t) {
    const Vec& u = q(t[0]);
    const Vec us = alg.adjoint(u);
    double res = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      res = std::max(res, residual(Vec(b2.act(t[0]).matrix().col(i)), alg.multiply(alg.multiply(u, b.act(t[0]).matrix().col(i)), us)));
    return res;
  }));
  r.add(sweep(prefix + ".cocycle", "beta'(x,y) = q_x b_x(q_y) beta(x,y) q_xy*", {n, n}, tol, [&](auto t) {
    const std::size_t x = t[0], y = t[1];
    Vec v = alg.multiply(q(x), b.apply(x, q(y)));
    v = alg.multiply(alg.multiply(v, b.alpha(x, y)), alg.adjoint(q(g.mul(x, y))));
    return residual(b2.alpha(x, y), v);
  }));
  return r;
}

TwistedAction flip(const TwistedAction& ta) {
  const auto& g = *ta.group;
  if (!g.is_product()) throw InputError("flip requires a direct-product group");
  auto h = direct_product(g.right_factor(), g.left_factor());
  const std::size_t n = g.order();
  auto back = [&](std::size_t z) {
    auto [a, b] = h->split(z);
    return g.pair(b, a);
  };
  std::vector<StarAutomorphism> maps;
  for (std::size_t z = 0; z < n; ++z) maps.push_back(ta.act(back(z)));
  std::vector<Vec> cocycle(n * n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t w = 0; w < n; ++w) cocycle[z * n + w] = ta.alpha(back(z), back(w));
  return make_twisted_action(h, ta.algebra, std::move(maps), std::move(cocycle));
}

double action_distance(const TwistedAction& a, const TwistedAction& b) {
  if (a.order() != b.order() || a.algebra->dim() != b.algebra->dim()) throw InputError("action_distance: shape mismatch");
  double res = 0.0;
  for (std::size_t x = 0; x < a.order(); ++x) res = std::max(res, residual(a.act(x).matrix(), b.act(x).matrix()));
  for (std::size_t i = 0; i < a.cocycle.size(); ++i) res = std::max(res, residual(a.cocycle[i], b.cocycle[i]));
  return res;
}

}  // namespace workbench

#include "workbench/crossed_product.hpp"

namespace workbench {

namespace {

bool is_zero(const Vec& v) {
  for (const auto& c : v)
    if (c != Complex(0.0)) return false;
  return true;
}

}  // namespace

std::vector<Mat> regular_images(const TwistedAction& ta, const std::vector<Mat>& varpi) {
  const auto& g = *ta.group;
  const auto& alg = *ta.algebra;
  const std::size_t n = g.order(), da = alg.dim();
  if (varpi.size() != da) throw InputError("regular representation: varpi has wrong number of images");
  const auto d = varpi.front().rows();
  auto rep = [&](const Vec& m) {
    Mat out = Mat::Zero(d, d);
    for (std::size_t i = 0; i < da; ++i)
      if (m[i] != Complex(0.0)) out += m[i] * varpi[i];
    return out;
  };
  const auto big = static_cast<Eigen::Index>(n) * d;
  std::vector<Mat> images;
  images.reserve(n * da);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t i = 0; i < da; ++i) {
      Mat m = Mat::Zero(big, big);
      const Vec ei = alg.basis(i);
      for (std::size_t x = 0; x < n; ++x) {
        Mat blk = rep(alg.multiply(ta.apply(x, ei), ta.alpha(x, z)));
        m.block(static_cast<Eigen::Index>(x) * d, static_cast<Eigen::Index>(g.mul(x, z)) * d, d, d) = blk;
      }
      images.push_back(std::move(m));
    }
  return images;
}

CrossedProduct::CrossedProduct(TwistedAction action)
    : StarAlgebra(action.group->order() * action.algebra->dim()), action_(std::move(action)) {
  set_materialization(regular_images(action_, base()->rep_basis()));
}

Vec CrossedProduct::slice(const Vec& f, std::size_t x) const {
  const auto da = static_cast<Eigen::Index>(base()->dim());
  return f.segment(static_cast<Eigen::Index>(x) * da, da);
}

void CrossedProduct::set_slice(Vec& f, std::size_t x, const Vec& m) const {
  const auto da = static_cast<Eigen::Index>(base()->dim());
  f.segment(static_cast<Eigen::Index>(x) * da, da) = m;
}

Vec CrossedProduct::point_mass(std::size_t x, const Vec& m) const {
  Vec f = zero();
  set_slice(f, x, m);
  return f;
}

double CrossedProduct::l1_norm(const Vec& f) const {
  double s = 0.0;
  for (std::size_t x = 0; x < group()->order(); ++x) s += base()->norm(slice(f, x));
  return s;
}

Vec CrossedProduct::unit() const { return point_mass(group()->identity(), base()->unit()); }

std::string CrossedProduct::describe() const {
  return "(" + base()->describe() + ") x| G[" + std::to_string(group()->order()) + "]";
}

Vec CrossedProduct::product(const Vec& f, const Vec& g) const {
  const auto& grp = *group();
  const auto& alg = *base();
  const std::size_t n = grp.order();
  std::vector<Vec> fs, gs;
  for (std::size_t x = 0; x < n; ++x) {
    fs.push_back(slice(f, x));
    gs.push_back(slice(g, x));
  }
  Vec out = zero();
  for (std::size_t y = 0; y < n; ++y) {
    if (is_zero(fs[y])) continue;
    for (std::size_t z = 0; z < n; ++z) {
      if (is_zero(gs[z])) continue;
      // x = yz, so y^-1 x = z
      const std::size_t x = grp.mul(y, z);
      Vec term = alg.multiply(alg.multiply(fs[y], action_.apply(y, gs[z])), action_.alpha(y, z));
      set_slice(out, x, slice(out, x) + term);
    }
  }
  return out;
}

Vec CrossedProduct::involution(const Vec& f) const {
  const auto& grp = *group();
  const auto& alg = *base();
  Vec out = zero();
  for (std::size_t x = 0; x < grp.order(); ++x) {
    const std::size_t xi = grp.inv(x);
    Vec fx = slice(f, xi);
    if (is_zero(fx)) continue;
    set_slice(out, x, alg.multiply(alg.adjoint(action_.alpha(x, xi)), action_.apply(x, alg.adjoint(fx))));
  }
  return out;
}

CrossedProductPtr crossed_product(TwistedAction action) { return std::make_shared<CrossedProduct>(std::move(action)); }

Representation regular_representation(const CrossedProductPtr& cp, const Representation& varpi) {
  if (varpi.source() != cp->base()) throw InputError("regular_representation: varpi is not a representation of the base");
  return Representation(cp, regular_images(cp->action(), varpi.images()));
}

Vec iota_apply(const CrossedProduct& cp, const Vec& f, const OneCochain& q) {
  const auto& alg = *cp.base();
  Vec out = cp.zero();
  for (std::size_t x = 0; x < cp.group()->order(); ++x)
    cp.set_slice(out, x, alg.multiply(cp.slice(f, x), alg.adjoint(q(x))));
  return out;
}

StarIsomorphism iota(const CrossedProductPtr& source, const CrossedProductPtr& target, const OneCochain& q, double tol) {
  if (source->base() != q.algebra || target->base() != q.algebra || source->group()->order() != q.values.size())
    throw InputError("iota: carrier mismatch");
  return StarIsomorphism::from_map(
      source, target, [&](const Vec& f) { return iota_apply(*source, f, q); }, "iota", tol);
}

}  // namespace workbench

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "pauli.hpp"
#include "workbench/crossed_product.hpp"

using namespace workbench;

namespace {

auto M2() {
  static auto a = matrix_algebra(2);
  return a;
}
Vec el(const Mat& m) { return M2()->from_blocks({m}); }

CrossedProductPtr c_z2() { return crossed_product(trivial_action(cyclic(2), matrix_algebra(1))); }

CrossedProductPtr m2_ad_x() {
  return crossed_product(
      untwisted_action(cyclic(2), M2(), {StarAutomorphism::identity(M2()), ad(M2(), el(pauli::X()))}));
}

CrossedProductPtr m2_twisted() {
  auto g = direct_product(cyclic(2), cyclic(2));
  OneCochain rho = trivial_cochain(g, M2());
  rho.values[1] = el(pauli::Z());
  rho.values[2] = el(pauli::X());
  rho.values[3] = el(Mat(pauli::X() * pauli::Z()));
  return crossed_product(inner_action(rho));
}

Vec scalar_fn(std::initializer_list<Complex> vals) {
  Vec v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index k = 0;
  for (auto c : vals) v[k++] = c;
  return v;
}

}  // namespace

TEST_CASE("convolution examples") {
  auto cp = m2_ad_x();
  for (std::size_t i = 0; i < cp->dim(); ++i) CHECK(residual(cp->convolve(cp->unit(), cp->basis(i)), cp->basis(i)) == 0.0);

  auto c = c_z2();
  Vec s = scalar_fn({1, 1});
  CHECK(residual(c->convolve(s, s), scalar_fn({2, 2})) == 0.0);

  for (int trial = 0; trial < 5; ++trial) {
    Mat m = gen::matrix(2);
    Vec lhs = cp->convolve(cp->point_mass(1, M2()->unit()), cp->point_mass(1, el(m)));
    CHECK(residual(lhs, cp->point_mass(0, el(Mat(pauli::X() * m * pauli::X())))) < 1e-14);
  }
}

TEST_CASE("involution examples") {
  for (const auto& cp : {m2_ad_x(), m2_twisted()}) {
    const auto& ta = cp->action();
    const auto& g = *cp->group();
    for (int trial = 0; trial < 5; ++trial) {
      Mat m = gen::matrix(2);
      CHECK(residual(cp->involute(cp->point_mass(g.identity(), el(m))), cp->point_mass(g.identity(), el(Mat(m.adjoint())))) < 1e-14);
      for (std::size_t z = 0; z < g.order(); ++z) {
        const std::size_t zi = g.inv(z);
        // alpha(z^-1,z)* a_{z^-1}(m*), computed with plain matrices
        Mat alpha = M2()->block(ta.alpha(zi, z), 0);
        Mat amz = M2()->block(ta.apply(zi, el(Mat(m.adjoint()))), 0);
        Vec expect = cp->point_mass(zi, el(Mat(alpha.adjoint() * amz)));
        CHECK(residual(cp->involute(cp->point_mass(z, el(m))), expect) < 1e-13);
      }
    }
  }
  // trivial data: f^*(x) = f(x^-1)*
  auto c3 = crossed_product(trivial_action(cyclic(3), matrix_algebra(1)));
  Vec f = scalar_fn({2.0, 3.0, 5.0});
  CHECK(residual(c3->involute(f), scalar_fn({2.0, 5.0, 3.0})) == 0.0);
}

TEST_CASE("point-mass calculus") {
  for (const auto& cp : {m2_ad_x(), m2_twisted()}) {
    const auto& ta = cp->action();
    const auto& g = *cp->group();
    const auto& A = *M2();
    for (int trial = 0; trial < 3; ++trial)
      for (std::size_t y = 0; y < g.order(); ++y)
        for (std::size_t z = 0; z < g.order(); ++z) {
          Vec n = gen::vec(4), m = gen::vec(4);
          Vec expect = cp->point_mass(g.mul(y, z), A.multiply(A.multiply(n, ta.apply(y, m)), ta.alpha(y, z)));
          CHECK(residual(cp->convolve(cp->point_mass(y, n), cp->point_mass(z, m)), expect) < 1e-12);
        }
    // (delta_e m) * f * (delta_e n) at x = m f(x) a_x(n)
    for (int trial = 0; trial < 3; ++trial) {
      Vec m = gen::vec(4), n = gen::vec(4), f = gen::vec(cp->dim());
      const std::size_t e = g.identity();
      Vec lhs = cp->convolve(cp->convolve(cp->point_mass(e, m), f), cp->point_mass(e, n));
      for (std::size_t x = 0; x < g.order(); ++x)
        CHECK(residual(cp->slice(lhs, x), A.multiply(A.multiply(m, cp->slice(f, x)), ta.apply(x, n))) < 1e-11);
    }
  }
  CHECK(residual(m2_ad_x()->point_mass(0, M2()->unit()), m2_ad_x()->unit()) == 0.0);
}

TEST_CASE("point masses of unitaries are unitary") {
  auto cp = m2_twisted();
  for (std::size_t z = 0; z < 4; ++z) CHECK(unitary_residual(*cp, cp->point_mass(z, el(gen::unitary(2)))) < 1e-12);
}

TEST_CASE("regular representation") {
  auto c = c_z2();
  const auto& r = c->rep_basis();
  CHECK(residual(r[0], Mat(Mat::Identity(2, 2))) == 0.0);
  CHECK(residual(r[1], pauli::X()) == 0.0);
  CHECK(c->norm(scalar_fn({1, 1})) == doctest::Approx(2.0));
  CHECK(c->l1_norm(scalar_fn({1, 1})) == doctest::Approx(2.0));
  CHECK(c->l1_norm(c->zero()) == 0.0);

  for (const auto& cp : {m2_ad_x(), m2_twisted()}) {
    auto rep = regular_representation(cp, materialization(M2()));
    CHECK(rep.verify().ok());
    CHECK(rep.faithful());
    CHECK(cp->rep_rank() == cp->dim());
    CHECK(residual(rep(cp->unit()), Mat(Mat::Identity(8 * 0 + static_cast<Eigen::Index>(rep.hilbert_dim()), static_cast<Eigen::Index>(rep.hilbert_dim())))) == 0.0);
    CHECK(verify_star_algebra(*cp).ok());
  }
}

TEST_CASE("integrated form of the regular representation on point masses") {
  auto cp = m2_twisted();
  const auto& ta = cp->action();
  const auto& g = *cp->group();
  const std::size_t n = g.order();
  // pi(m) and U_z built blockwise, independent of regular_images
  auto pi = [&](const Vec& m) {
    Mat out = Mat::Zero(2 * n, 2 * n);
    for (std::size_t x = 0; x < n; ++x) out.block(2 * x, 2 * x, 2, 2) = M2()->block(ta.apply(x, m), 0);
    return out;
  };
  auto U = [&](std::size_t z) {
    Mat out = Mat::Zero(2 * n, 2 * n);
    for (std::size_t x = 0; x < n; ++x) out.block(2 * x, 2 * g.mul(x, z), 2, 2) = M2()->block(ta.alpha(x, z), 0);
    return out;
  };
  for (std::size_t z = 0; z < n; ++z) {
    Vec m = gen::vec(4);
    CHECK(residual(cp->represent(cp->point_mass(z, m)), Mat(pi(m) * U(z))) < 1e-13);
  }
}

TEST_CASE("double centralizer identity") {
  for (const auto& cp : {m2_ad_x(), m2_twisted()}) {
    const std::size_t n = cp->dim();
    for (std::size_t z = 0; z < cp->group()->order(); ++z) {
      Vec dz = cp->point_mass(z, el(gen::unitary(2)));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vec f = cp->basis(i), g = cp->basis(j);
          CHECK(residual(cp->multiply(f, cp->multiply(dz, g)), cp->multiply(cp->multiply(f, dz), g)) < 1e-12);
        }
    }
  }
}

TEST_CASE("materialized norm is a C*-norm dominated by the l1 norm") {
  for (const auto& cp : {m2_ad_x(), m2_twisted(), c_z2()}) {
    for (int trial = 0; trial < 20; ++trial) {
      Vec f = gen::vec(cp->dim());
      const double nf = cp->norm(f);
      CHECK(std::abs(cp->norm(cp->multiply(cp->adjoint(f), f)) - nf * nf) < 1e-9 * std::max(1.0, nf * nf));
      CHECK(nf <= cp->l1_norm(f) + 1e-9);
    }
  }
}

TEST_CASE("cached multiply agrees with the direct formula") {
  auto cp = m2_twisted();
  for (int trial = 0; trial < 10; ++trial) {
    Vec f = gen::vec(cp->dim()), g = gen::vec(cp->dim());
    CHECK(residual(cp->multiply(f, g), cp->convolve(f, g)) < 1e-11);
    CHECK(residual(cp->adjoint(f), cp->involute(f)) < 1e-12);
  }
}

TEST_CASE("nested crossed products") {
  auto inner = m2_ad_x();
  auto outer = crossed_product(trivial_action(cyclic(2), inner));
  CHECK(outer->dim() == 16);
  CHECK(verify_star_algebra(*outer).ok());
  auto ad_delta = ad(inner, inner->point_mass(1, M2()->unit()));
  auto outer2 = crossed_product(untwisted_action(cyclic(2), inner, {StarAutomorphism::identity(inner), ad_delta}));
  CHECK(verify_star_algebra(*outer2).ok());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "pauli.hpp"
#include "workbench/crossed_product.hpp"
#include "workbench/twisted_action.hpp"

using namespace workbench;

namespace {

auto M2() {
  static auto a = matrix_algebra(2);
  return a;
}

Vec el(const Mat& m) { return M2()->from_blocks({m}); }

TwistedAction ad_x_action() {
  auto g = cyclic(2);
  return untwisted_action(g, M2(), {StarAutomorphism::identity(M2()), ad(M2(), el(pauli::X()))});
}

OneCochain random_cochain(const GroupPtr& g) {
  OneCochain q = trivial_cochain(g, M2());
  for (std::size_t x = 0; x < g->order(); ++x)
    if (x != g->identity()) q.values[x] = el(gen::unitary(2));
  return q;
}

// Z2 x Z2 acting by ad(X^a Z^b); the cocycle is a nontrivial sign.
TwistedAction pauli_inner_action() {
  auto g = direct_product(cyclic(2), cyclic(2));
  OneCochain rho = trivial_cochain(g, M2());
  rho.values[1] = el(pauli::Z());
  rho.values[2] = el(pauli::X());
  rho.values[3] = el(Mat(pauli::X() * pauli::Z()));
  return inner_action(rho);
}

}  // namespace

TEST_CASE("verify_twisted_action examples") {
  CHECK(verify_twisted_action(trivial_action(cyclic(2), M2())).ok());
  CHECK(verify_twisted_action(ad_x_action()).ok());
  auto inner = pauli_inner_action();
  CHECK(verify_twisted_action(inner).ok());
  // the sign cocycle is genuinely nontrivial: alpha((1,0),(0,1)) = X Z (XZ)* = 1, alpha((0,1),(1,0)) = Z X (XZ)* = -1
  CHECK(residual(inner.alpha(2, 1), el(pauli::I())) < 1e-15);
  CHECK(residual(inner.alpha(1, 2), el(Mat(-pauli::I()))) < 1e-15);

  auto broken = trivial_action(cyclic(2), M2());
  broken.cocycle[0 * 2 + 1] = el(Mat(-pauli::I()));  // alpha(e,1) = -1
  auto r = verify_twisted_action(broken);
  CHECK_FALSE(r.ok());
  const auto& c = r.at("action.normalization");
  CHECK_FALSE(c.pass);
  REQUIRE(c.witness);
  CHECK(*c.witness == Tuple{1});
}

TEST_CASE("exterior_transform examples") {
  auto b = trivial_action(cyclic(2), M2());
  auto same = exterior_transform(b, trivial_cochain(b.group, M2()));
  CHECK(action_distance(same, b) == 0.0);

  OneCochain q = trivial_cochain(b.group, M2());
  q.values[1] = el(pauli::Z());
  auto b2 = exterior_transform(b, q);
  CHECK(residual(b2.act(1).matrix(), ad(M2(), el(pauli::Z())).matrix()) < 1e-15);
  CHECK(residual(b2.alpha(1, 1), M2()->unit()) < 1e-15);
  CHECK(verify_twisted_action(b2).ok());

  auto back = exterior_transform(b2, inverse_cochain(q));
  CHECK(action_distance(back, b) < 1e-14);
}

TEST_CASE("exterior equivalence is an equivalence relation") {
  for (const auto& b : {ad_x_action(), pauli_inner_action()}) {
    CHECK(check_exterior_equivalence(b, b, trivial_cochain(b.group, M2())).ok());
    for (int trial = 0; trial < 5; ++trial) {
      auto q = random_cochain(b.group), p = random_cochain(b.group);
      auto b1 = exterior_transform(b, q);
      auto b2 = exterior_transform(b1, p);
      CHECK(verify_twisted_action(b1).ok());
      CHECK(verify_twisted_action(b2).ok());
      CHECK(check_exterior_equivalence(b, b1, q).ok());
      CHECK(check_exterior_equivalence(b1, b, inverse_cochain(q)).ok());
      CHECK(check_exterior_equivalence(b, b2, cochain_product(p, q)).ok());
      CHECK(action_distance(exterior_transform(b1, inverse_cochain(q)), b) < 1e-12);
    }
  }
  // a wrong cochain is rejected
  auto b = ad_x_action();
  OneCochain q = trivial_cochain(b.group, M2());
  q.values[1] = el(pauli::Z());
  auto r = check_exterior_equivalence(b, b, q);
  CHECK_FALSE(r.ok());
}

TEST_CASE("iota_q is a star-isomorphism") {
  auto b = ad_x_action();
  auto src = crossed_product(b);
  CHECK(src->dim() == 8);

  auto id = iota(src, src, trivial_cochain(b.group, M2()));
  CHECK(residual(id.matrix(), Mat(Mat::Identity(8, 8))) == 0.0);
  CHECK(id.verified());

  for (int trial = 0; trial < 5; ++trial) {
    auto q = random_cochain(b.group);
    auto dst = crossed_product(exterior_transform(b, q));
    auto iq = iota(src, dst, q);
    CHECK(iq.verified());
    CHECK(iq.certificate().max_residual() < 1e-9);
    CHECK(residual(iq(src->unit()), dst->unit()) < 1e-15);
    for (std::size_t i = 0; i < 8; ++i) {
      Vec f = src->basis(i);
      CHECK(residual(iq(src->involute(f)), dst->involute(iq(f))) < 1e-12);
    }
  }
}

TEST_CASE("flip") {
  auto h = direct_product(cyclic(2), cyclic(3));
  auto t = trivial_action(h, M2());
  auto f = flip(t);
  CHECK(f.group->order() == 6);
  CHECK(f.group->left_factor()->order() == 3);
  CHECK(action_distance(f, trivial_action(f.group, M2())) == 0.0);

  auto inner = pauli_inner_action();
  auto ff = flip(flip(inner));
  CHECK(action_distance(ff, inner) == 0.0);
  auto fi = flip(inner);
  CHECK(verify_twisted_action(fi).ok());
  // (xi,x) slot of the flip reads the (x,xi) slot of the original
  CHECK(residual(fi.alpha(fi.group->pair(1, 0), fi.group->pair(0, 1)), inner.alpha(inner.group->pair(0, 1), inner.group->pair(1, 0))) == 0.0);
  CHECK_THROWS_AS(flip(ad_x_action()), InputError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "generators.hpp"
#include "workbench/fixtures.hpp"
#include "workbench/representations.hpp"

using namespace workbench;

namespace {

void expect_ok(const Report& r) {
  for (const auto& c : r.checks()) {
    CAPTURE(c.id);
    CAPTURE(c.max_residual);
    CHECK(c.pass);
  }
}

bool tables_equal(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].rows() != b[i].rows() || a[i] != b[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("induced representations on every fixture") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    auto cs = f.build();
    auto cr = induce(cs, materialization(cs.algebra()));
    auto r = verify_covariant_rep(cs, cr);
    expect_ok(r);
    CHECK(r.at("covrep.commutation").max_residual < 1e-9);
  }
}

TEST_CASE("induced representation of the trivial structure") {
  auto cs = fixtures::trivial();
  auto cr = induce(cs, materialization(cs.algebra()));
  CHECK(cr.hilbert_dim() == 8);
  // U_1 and V_1 are 0/1 coordinate shifts
  for (const auto* m : {&cr.U[1], &cr.V[1]}) {
    CHECK(m->cwiseAbs().sum() == doctest::Approx(8.0));
    CHECK(residual(Mat(*m * *m), Mat(Mat::Identity(8, 8))) == 0.0);
  }
  // pi is block diagonal
  Mat p = cr.pi.image(1);
  CHECK(p.block(0, 2, 2, 6).norm() == 0.0);
}

TEST_CASE("induced representation anticommutes on the scalar bicharacter") {
  auto cs = fixtures::z2z2_scalar();
  auto cr = induce(cs, materialization(cs.algebra()));
  CHECK(cr.hilbert_dim() == 8);
  CHECK(residual(Mat(cr.U[1] * cr.V[1]), Mat(-cr.V[1] * cr.U[1])) < 1e-15);
}

TEST_CASE("induce rejects a non-faithful varpi") {
  auto cs = fixtures::trivial();
  auto A = cs.algebra();
  std::vector<Mat> zero(A->dim(), Mat::Zero(1, 1));
  CHECK_THROWS_AS(induce(cs, Representation(A, zero)), InputError);
}

TEST_CASE("integrated form basics") {
  auto cs = fixtures::pauli();
  auto cp = crossed_product(cs.g());
  auto pair = regular_pair(cs.g(), materialization(cs.algebra()));
  expect_ok(verify_twisted_pair(cs.g(), pair));
  auto R = integrated_form(cp, pair);
  const auto N = static_cast<Eigen::Index>(R.hilbert_dim());
  CHECK(residual(R(cp->unit()), Mat(Mat::Identity(N, N))) < 1e-15);
  Vec m = gen::vec(4);
  CHECK(residual(R(cp->point_mass(1, m)), Mat(pair.pi(m) * pair.U[1])) < 1e-12);
  expect_ok(R.verify());
  // matches the crossed product's own materialization
  for (std::size_t i = 0; i < cp->dim(); ++i) CHECK(residual(R.image(i), cp->rep_basis()[i]) < 1e-14);
}

TEST_CASE("integrated form on C x| Z2") {
  auto c = matrix_algebra(1);
  auto ta = trivial_action(cyclic(2), c);
  auto cp = crossed_product(ta);
  auto R = integrated_form(cp, regular_pair(ta, materialization(c)));
  auto r = R.verify(1e-12);
  CHECK(r.ok());
  CHECK(R.faithful());
}

TEST_CASE("product representation round trips") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    auto cs = f.build();
    auto cr = induce(cs, materialization(cs.algebra()));
    auto pr = to_product_rep(cs, cr);
    expect_ok(verify_twisted_pair(forward_action(cs), pr.forward, kDefaultTolerance, "W"));
    expect_ok(verify_twisted_pair(backward_action(cs), pr.backward, kDefaultTolerance, "W'"));
    const auto& P = *cs.product_group();
    const auto N = static_cast<Eigen::Index>(cr.hilbert_dim());
    CHECK(pr.forward.U[P.pair(cs.G().identity(), cs.Gt().identity())] == Mat::Identity(N, N));

    auto back = from_product_rep(cs, pr.forward);
    CHECK(tables_equal(back.U, cr.U));
    CHECK(tables_equal(back.V, cr.V));
    auto again = to_product_rep(cs, back);
    CHECK(tables_equal(again.forward.U, pr.forward.U));
  }
}

TEST_CASE("recovered unitaries of the scalar bicharacter") {
  auto cs = fixtures::z2z2_scalar();
  auto cr = induce(cs, materialization(cs.algebra()));
  auto back = from_product_rep(cs, to_product_rep(cs, cr).forward);
  CHECK(residual(Mat(back.U[1] * back.V[1]), Mat(back.pi(cs.kappa(1, 1)) * back.V[1] * back.U[1])) < 1e-15);
}

TEST_CASE("inducing then converting gives the induced pair of the forward action") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    auto cs = f.build();
    auto varpi = materialization(cs.algebra());
    auto pr = to_product_rep(cs, induce(cs, varpi));
    auto reg = regular_pair(forward_action(cs), varpi);
    double worst = 0.0;
    for (std::size_t X = 0; X < reg.U.size(); ++X) worst = std::max(worst, residual(pr.forward.U[X], reg.U[X]));
    for (std::size_t i = 0; i < cs.algebra()->dim(); ++i)
      worst = std::max(worst, residual(pr.forward.pi.image(i), reg.pi.image(i)));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("double integrated forms and the correspondence") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    auto cs = f.build();
    auto b = build_bundle(cs);
    auto cr = induce(cs, materialization(cs.algebra()));
    auto r = check_correspondence(b, cr);
    expect_ok(r);
    auto R = double_integrated(b, cr);
    const auto N = static_cast<Eigen::Index>(R.hilbert_dim());
    CHECK(residual(R(b.BGt->unit()), Mat(Mat::Identity(N, N))) < 1e-14);
    CHECK(R.faithful());
  }
}

TEST_CASE("double integrated form on product elements") {
  auto cs = fixtures::pauli_twisted();
  auto b = build_bundle(cs);
  auto cr = induce(cs, materialization(cs.algebra()));
  auto R = double_integrated(b, cr);
  const std::size_t n = cs.G().order(), nt = cs.Gt().order();
  Vec phi = gen::vec(n), psi = gen::vec(nt), m = gen::vec(cs.algebra()->dim());
  const auto& B = *b.B.algebra;
  Vec F = b.BGt->zero();
  for (std::size_t xi = 0; xi < nt; ++xi) {
    Vec inner = B.zero();
    for (std::size_t x = 0; x < n; ++x) B.set_slice(inner, x, phi(static_cast<Eigen::Index>(x)) * m);
    b.BGt->set_slice(F, xi, psi(static_cast<Eigen::Index>(xi)) * inner);
  }
  const auto N = static_cast<Eigen::Index>(cr.hilbert_dim());
  Mat Uphi = Mat::Zero(N, N), Vpsi = Mat::Zero(N, N);
  for (std::size_t x = 0; x < n; ++x) Uphi += phi(static_cast<Eigen::Index>(x)) * cr.U[x];
  for (std::size_t xi = 0; xi < nt; ++xi) Vpsi += psi(static_cast<Eigen::Index>(xi)) * cr.V[xi];
  CHECK(residual(R(F), Mat(cr.pi(m) * Uphi * Vpsi)) < 1e-12);
}

TEST_CASE("integrated forms of induced representations are faithful") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    auto cs = f.build();
    auto cr = induce(cs, materialization(cs.algebra()));
    auto pr = to_product_rep(cs, cr);
    auto fwd = crossed_product(forward_action(cs));
    CHECK(integrated_form(fwd, pr.forward).rank() == fwd->dim());
  }
}

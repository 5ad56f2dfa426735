#include "workbench/fixtures.hpp"

#include "workbench/duality.hpp"

namespace workbench::fixtures {

namespace {

std::shared_ptr<const MatrixDirectSum> m2() {
  static auto a = matrix_algebra(2);
  return a;
}

Mat mat2(Complex a, Complex b, Complex c, Complex d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

Vec el(const Mat& m) { return m2()->from_blocks({m}); }
Vec I2() { return el(Mat::Identity(2, 2)); }
Vec X() { return el(mat2(0, 1, 1, 0)); }
Vec Z() { return el(mat2(1, 0, 0, -1)); }
Vec Y() { return el(mat2(0, Complex(0, -1), Complex(0, 1), 0)); }
Vec H() { return el(mat2(1, 1, 1, -1) / std::sqrt(2.0)); }

// kappa(x, xi) = 1 except the listed values.
std::vector<Vec> coupling(std::size_t n, std::size_t nt, const Vec& one,
                          std::initializer_list<std::tuple<std::size_t, std::size_t, Vec>> values) {
  std::vector<Vec> k(n * nt, one);
  for (const auto& [x, xi, v] : values) k[x * nt + xi] = v;
  return k;
}

OneCochain cochain(const GroupPtr& g, std::vector<Vec> values) { return OneCochain{g, m2(), std::move(values)}; }

TwistedAction ad_z2(const Vec& u) {
  auto g = cyclic(2);
  return inner_action(cochain(g, {I2(), u}));
}

}  // namespace

CovariantStructure trivial() {
  auto g = trivial_action(cyclic(2), m2());
  auto gt = trivial_action(cyclic(2), m2());
  auto k = unit_coupling(g, gt);
  return verify_covariant(make_semi_covariant(std::move(g), std::move(gt), std::move(k)));
}

CovariantStructure z2z2_scalar() {
  auto g = trivial_action(cyclic(2), m2());
  auto gt = trivial_action(cyclic(2), m2());
  return verify_covariant(make_semi_covariant(std::move(g), std::move(gt), coupling(2, 2, I2(), {{1, 1, -I2()}})));
}

CovariantStructure pauli() {
  return from_G_cochain(cochain(cyclic(2), {I2(), X()}), ad_z2(Z()), coupling(2, 2, I2(), {{1, 1, -I2()}}));
}

CovariantStructure pauli_mirror() {
  return from_Gtilde_cochain(cochain(cyclic(2), {I2(), X()}), ad_z2(Z()), coupling(2, 2, I2(), {{1, 1, -I2()}}));
}

CovariantStructure pauli_hadamard() {
  const Vec xz = m2()->multiply(X(), Z());
  return from_G_cochain(cochain(cyclic(2), {I2(), X()}), ad_z2(H()), coupling(2, 2, I2(), {{1, 1, xz}}));
}

CovariantStructure pauli_twisted() {
  auto g = direct_product(cyclic(2), cyclic(2));
  const Vec xz = m2()->multiply(X(), Z());
  return from_G_cochain(cochain(g, {I2(), Z(), X(), xz}), ad_z2(Y()),
                        coupling(4, 2, I2(), {{1, 1, -I2()}, {2, 1, -I2()}}));
}

CovariantStructure s3_trivial() {
  auto m3 = matrix_algebra(3);
  auto s3 = symmetric_group(3);
  OneCochain rho{s3, m3, {}};
  for (std::size_t p = 0; p < s3->order(); ++p) {
    auto perm = permutation_of(3, p);
    Mat m = Mat::Zero(3, 3);
    for (std::size_t i = 0; i < 3; ++i) m(static_cast<Eigen::Index>(perm[i]), static_cast<Eigen::Index>(i)) = 1.0;
    rho.values.push_back(m3->from_blocks({m}));
  }
  Mat j = Mat::Identity(3, 3) - Mat::Constant(3, 3, 2.0 / 3.0);
  OneCochain rhot{cyclic(2), m3, {m3->unit(), m3->from_blocks({j})}};
  auto gt = inner_action(rhot);
  return from_G_cochain(rho, gt, std::vector<Vec>(s3->order() * 2, m3->unit()));
}

CovariantStructure m2_z3_trivial() { return standard_structure(takai_m2_z3()); }

TwistedAction takai_c_z2() { return trivial_action(cyclic(2), matrix_algebra(1)); }
TwistedAction takai_m2_z3() { return trivial_action(cyclic(3), m2()); }
TwistedAction takai_m2_z2_adx() { return untwisted_action(cyclic(2), m2(), {StarAutomorphism::identity(m2()), ad(m2(), X())}); }

const std::vector<Named>& core() {
  static const std::vector<Named> v = {
      {"trivial", trivial}, {"z2z2_scalar", z2z2_scalar}, {"pauli", pauli},
      {"s3_trivial", s3_trivial}, {"m2_z3_trivial", m2_z3_trivial}};
  return v;
}

const std::vector<Named>& all() {
  static const std::vector<Named> v = [] {
    auto out = core();
    out.push_back({"pauli_mirror", pauli_mirror});
    out.push_back({"pauli_hadamard", pauli_hadamard});
    out.push_back({"pauli_twisted", pauli_twisted});
    return out;
  }();
  return v;
}

GroupPtr broken_z3_table() { return FiniteGroup::from_table({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}}); }

TwistedAction broken_normalization() {
  auto ta = trivial_action(cyclic(2), m2());
  ta.cocycle[0 * 2 + 1] = -I2();
  return ta;
}

SemiCovariantStructure broken_coupling() {
  return make_semi_covariant(trivial_action(cyclic(2), m2()), trivial_action(cyclic(2), m2()),
                             coupling(2, 2, I2(), {{1, 1, Complex(0, 1) * I2()}}));
}

}  // namespace workbench::fixtures

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "generators.hpp"
#include "workbench/fixtures.hpp"
#include "workbench/spec_format.hpp"

using namespace workbench;

namespace {

const std::string kDir = FIXTURE_DIR;

// Throws unless parsing fails; returns the message.
std::string parse_error(const std::string& text) {
  try {
    parse_spec(text, "t");
  } catch (const SpecError& e) {
    return e.what();
  }
  FAIL("expected a SpecError");
  return {};
}

std::size_t error_line(const std::string& text) {
  try {
    parse_spec(text, "t");
  } catch (const SpecError& e) {
    return e.line;
  }
  return 0;
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("z2z2 scalar coupling parses to kappa(1,1) = -1") {
  auto s = load_spec(kDir + "/z2z2_scalar.spec");
  REQUIRE(s.has_gt());
  auto cs = verify_covariant(s.semi());
  auto ref = fixtures::z2z2_scalar();
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t xi = 0; xi < 2; ++xi) CHECK(residual(cs.kappa(x, xi), ref.kappa(x, xi)) < 1e-15);
  CHECK(residual(cs.kappa(1, 1), -s.algebra->unit()) < 1e-15);
}

TEST_CASE("fixture files match the in-code structures") {
  for (const auto& f : fixtures::core()) {
    CAPTURE(f.name);
    auto s = load_spec(kDir + "/" + f.name + ".spec");
    auto ref = f.build();
    auto cs = verify_covariant(s.semi());
    CHECK(action_distance(cs.g(), ref.g()) < 1e-12);
    CHECK(action_distance(cs.gt(), ref.gt()) < 1e-12);
    for (std::size_t x = 0; x < ref.g().order(); ++x)
      for (std::size_t xi = 0; xi < ref.gt().order(); ++xi) CHECK(residual(cs.kappa(x, xi), ref.kappa(x, xi)) < 1e-12);
  }
}

TEST_CASE("single-group files have no Gt") {
  auto s = load_spec(kDir + "/m2_z2_adx.spec");
  CHECK_FALSE(s.has_gt());
  CHECK_THROWS_AS(s.semi(), InputError);
  CHECK(action_distance(*s.g, fixtures::takai_m2_z2_adx()) < 1e-15);
}

TEST_CASE("tolerance and seed statements") {
  auto s = parse_spec("tolerance 1e-7\nseed 42\nalgebra 1\ngroup G cyclic 2\n");
  REQUIRE(s.tolerance);
  CHECK(*s.tolerance == doctest::Approx(1e-7));
  REQUIRE(s.seed);
  CHECK(*s.seed == 42);
}

TEST_CASE("complex literals in unitary rows") {
  auto s = parse_spec(
      "algebra 2\n"
      "unitary Y\n  row 0 -i\n  row i 0\nend\n"
      "unitary W\n  row 0.6 0.8i\n  row 0.8i 0.6\nend\n"
      "group G cyclic 2\naction G\n  1 ad Y\nend\n");
  Mat y(2, 2);
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  Vec e = s.algebra->from_blocks({Mat::Identity(2, 2)});
  Mat m(2, 2);
  m << 1, Complex(0.5, 0.25), 2.0, -1.0;
  Vec a = s.algebra->from_blocks({m});
  Vec expect = s.algebra->from_blocks({y * m * y.adjoint()});
  CHECK(residual(s.g->apply(1, a), expect) < 1e-15);
  CHECK(residual(s.g->apply(0, a), a) < 1e-15);
  CHECK(residual(s.g->alpha(1, 1), e) == 0.0);
}

TEST_CASE("missing cocycle pair is named") {
  auto msg = parse_error("algebra 1\ngroup G cyclic 3\naction G trivial\ncocycle G\n  1 1 phase 1/3\nend\n");
  CHECK(contains(msg, "cocycle.G: missing entry for pair (1,2)"));
}

TEST_CASE("missing action element is named") {
  auto msg = parse_error("algebra 1\ngroup G cyclic 3\naction G\n  1 trivial\nend\n");
  CHECK(contains(msg, "action.G: missing entry for element 2"));
}

TEST_CASE("cyclic 0 is rejected with position") {
  const std::string text = "algebra 1\n# comment\ngroup G cyclic 0\n";
  auto msg = parse_error(text);
  CHECK(contains(msg, "t:3:"));
  CHECK(contains(msg, "positive"));
  CHECK(error_line(text) == 3);
}

TEST_CASE("semantic errors") {
  CHECK(contains(parse_error("algebra 2\nunitary U\n  row 1 1\n  row 0 1\nend\n"), "not unitary"));
  CHECK(contains(parse_error("algebra 1\ngroup G symmetric 3\ngroup Gt dual G\n"), "t:3:"));
  CHECK(contains(parse_error("algebra 1\ngroup G cyclic 2\ngroup Gt cyclic 3\ncoupling pairing\n"), "pairing"));
  CHECK(contains(parse_error("algebra 1\ngroup G cyclic 2\ngroup G cyclic 2\n"), "defined twice"));
  CHECK(contains(parse_error("group G cyclic 2\n"), "algebra"));
  CHECK(contains(parse_error("algebra 1\n"), "group G"));
  CHECK(contains(parse_error("algebra 1\ngroup G cyclic 2\nfrobnicate\n"), "t:3:1"));
  CHECK(contains(parse_error("algebra 1\ngroup G table\n  row 0 1\n  row 1 2\nend\n"), "out of range"));
  CHECK(contains(parse_error("algebra 2\ngroup G cyclic 2\naction G\n  1 ad Q\nend\n"), "Q"));
  CHECK(contains(parse_error("algebra 1\ngroup G cyclic 2\naction G\n  1 trivial\n"), "t:"));
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(load_spec(kDir + "/does_not_exist.spec"), InputError);
}

TEST_CASE("fnv1a reference vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("property: random phase couplings parse to exp(2 pi i p/q)") {
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + gen::index(3);
    const std::size_t m = 2 + gen::index(3);
    std::string text = "algebra 1\ngroup G cyclic " + std::to_string(n) + "\ngroup Gt cyclic " + std::to_string(m) +
                       "\ncoupling\n";
    std::vector<double> turns(n * m, 0.0);
    for (std::size_t x = 1; x < n; ++x)
      for (std::size_t xi = 1; xi < m; ++xi) {
        const std::size_t q = 1 + gen::index(12), p = gen::index(q);
        turns[x * m + xi] = static_cast<double>(p) / static_cast<double>(q);
        text += "  " + std::to_string(x) + " " + std::to_string(xi) + " phase " + std::to_string(p) + "/" +
                std::to_string(q) + "\n";
      }
    text += "end\n";
    auto s = parse_spec(text);
    for (std::size_t k = 0; k < n * m; ++k) {
      const Complex expect = std::polar(1.0, 2.0 * M_PI * turns[k]);
      CHECK(std::abs(s.coupling[k](0) - expect) < 1e-14);
    }
  }
}

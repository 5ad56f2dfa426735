// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <Eigen/LU>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "workbench/crossed_product.hpp"
#include "workbench/duality.hpp"
#include "workbench/fixtures.hpp"
#include "workbench/generations.hpp"
#include "workbench/representations.hpp"

using namespace workbench;

namespace {

constexpr double kTol = 1e-9;
constexpr double kLooseTol = 1e-8;  // four-variable sweep and the duality chain

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  // Every check in r passes and stays under tol.
  void require(const Report& r, double tol, const std::string& where) {
    for (const auto& c : r.checks()) {
      worst = std::max(worst, c.max_residual);
      if (!c.pass || !(c.max_residual < tol)) fail(where + ": " + c.id);
    }
  }
  void require_id(const Report& r, const std::string& id, double tol, const std::string& where) {
    const Check* c = r.find(id);
    if (!c) return fail(where + ": no check " + id);
    worst = std::max(worst, c->max_residual);
    if (!c->pass || !(c->max_residual < tol)) fail(where + ": " + id);
  }
  void require_prefix(const Report& r, const std::string& prefix, double tol, const std::string& where) {
    bool any = false;
    for (const auto& c : r.checks()) {
      if (c.id.rfind(prefix, 0) != 0) continue;
      any = true;
      worst = std::max(worst, c.max_residual);
      if (!c.pass || !(c.max_residual < tol)) fail(where + ": " + c.id);
    }
    if (!any) fail(where + ": no checks under " + prefix);
  }
};

double mat_diff(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
  return a.rows() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

double mats_diff(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.size() != b.size()) return 1e300;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, mat_diff(a[i], b[i]));
  return d;
}

template <class F>
Outcome guarded(F body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  return o;
}

// Center dimension of a twisted group algebra computed straight from sigma:
// nullity of c -> (c d_h - d_h c)_h with d_g d_h = sigma(g,h) d_gh.
std::size_t center_dimension_oracle(const FiniteGroup& h, const std::function<Complex(std::size_t, std::size_t)>& sigma) {
  const auto n = static_cast<Eigen::Index>(h.order());
  Mat m = Mat::Zero(n * n, n);
  for (Eigen::Index g = 0; g < n; ++g)
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto gg = static_cast<std::size_t>(g), kk = static_cast<std::size_t>(k);
      m(k * n + static_cast<Eigen::Index>(h.mul(gg, kk)), g) += sigma(gg, kk);
      m(k * n + static_cast<Eigen::Index>(h.mul(kk, gg)), g) -= sigma(kk, gg);
    }
  Eigen::FullPivLU<Mat> lu(m);
  lu.setThreshold(1e-10);
  return static_cast<std::size_t>(n - lu.rank());
}

Outcome axiom_suites() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::core()) o.require(check_covariant(f.build().data(), kTol), kTol, f.name);
  });
}

Outcome forward_action_sweep() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::all()) {
      auto cs = f.build();
      o.require(verify_twisted_action(forward_action(cs), kTol, "forward"), kTol, f.name);
    }
  });
}

Outcome four_variable_sweep() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::all())
      o.require_id(check_covariant(f.build().data(), kLooseTol), "covariant.master", kLooseTol, f.name);
  });
}

Outcome exterior_equivalence() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::all()) {
      auto cs = f.build();
      auto pa = check_product_actions(cs, kTol);
      o.require_prefix(pa, "exterior", kTol, f.name);
      o.require_prefix(pa, "backward", kTol, f.name);
      auto fwd = crossed_product(forward_action(cs));
      auto bwd = crossed_product(backward_action(cs));
      o.require(iota(fwd, bwd, coupling_cochain(cs), kTol).certificate(), kTol, f.name + " iota");
    }
  });
}

Outcome four_isomorphisms() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::all()) {
      auto cs = f.build();
      auto b = build_bundle(cs, kTol);
      o.require(check_isomorphisms(b, kTol), kTol, f.name);
      const std::size_t expect = cs.G().order() * cs.Gt().order() * cs.algebra()->dim();
      for (const auto& alg : {b.BGt, b.CG, b.forward, b.backward})
        if (alg->dim() != expect) o.fail(f.name + ": dimension " + std::to_string(alg->dim()));
    }
  });
}

Outcome composition_laws() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::all()) o.require(check_composition_laws(build_bundle(f.build(), kTol), kTol), kTol, f.name);
  });
}

Outcome first_generations() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::all()) {
      auto cs = f.build();
      auto B = first_generation_G(cs, kTol);
      auto C = first_generation_Gtilde(cs, kTol);
      o.require(check_covariant(B.structure.data(), kTol), kTol, f.name + " B");
      o.require(check_covariant(C.structure.data(), kTol), kTol, f.name + " C");
      auto rb = check_first_generation_G(cs, B, kTol);
      auto rc = check_first_generation_Gtilde(cs, C, kTol);
      o.require(rb, kTol, f.name);
      o.require(rc, kTol, f.name);
      o.require_prefix(rb, "first_G.particular", kTol, f.name);
      o.require_prefix(rc, "first_Gt.particular", kTol, f.name);
      for (const char* id : {"first_G.lemma_b", "first_G.lemma_bt"}) o.require_id(rb, id, kTol, f.name);
      for (const char* id : {"first_Gt.lemma_c", "first_Gt.lemma_ct"}) o.require_id(rc, id, kTol, f.name);
    }
  });
}

Outcome correspondences() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::all()) {
      auto cs = f.build();
      auto cr = induce(cs, materialization(cs.algebra()));
      auto pr = to_product_rep(cs, cr);
      auto back = from_product_rep(cs, pr.forward);
      auto again = from_product_rep(cs, pr.backward);
      // round trips are required to be exact, not merely within tolerance
      for (const auto* r : {&back, &again}) {
        if (mats_diff(r->U, cr.U) != 0.0 || mats_diff(r->V, cr.V) != 0.0 ||
            mats_diff(r->pi.images(), cr.pi.images()) != 0.0)
          o.fail(f.name + ": product round trip not exact");
      }
      auto b = build_bundle(cs, kTol);
      o.require(check_correspondence(b, cr, kTol), kTol, f.name);
    }
  });
}

Outcome induced_commutation() {
  return guarded([](Outcome& o) {
    for (const auto& f : fixtures::all()) {
      auto cs = f.build();
      auto cr = induce(cs, materialization(cs.algebra()));
      o.require_id(verify_covariant_rep(cs, cr, kTol, "covrep"), "covrep.commutation", kTol, f.name);
    }
  });
}

Outcome takai() {
  return guarded([](Outcome& o) {
    struct Input {
      const char* name;
      TwistedAction ta;
      std::size_t dim;
    };
    for (const auto& in : {Input{"C/Z2", fixtures::takai_c_z2(), 4}, Input{"M2/Z3", fixtures::takai_m2_z3(), 36},
                           Input{"M2/Z2 ad X", fixtures::takai_m2_z2_adx(), 16}}) {
      auto chain = takai_chain(in.ta, kLooseTol);
      for (const auto& a : chain.arrows) o.require(a.certificate(), kLooseTol, std::string(in.name) + " " + a.name());
      o.require(chain.composite.certificate(), kLooseTol, std::string(in.name) + " composite");
      const std::size_t n = in.ta.order();
      if (chain.final_algebra->dim() != n * n * in.ta.algebra->dim() || chain.final_algebra->dim() != in.dim)
        o.fail(std::string(in.name) + ": final dimension " + std::to_string(chain.final_algebra->dim()));
    }
  });
}

Outcome twisted_group_algebra_check() {
  return guarded([](Outcome& o) {
    auto h = direct_product(cyclic(2), cyclic(2));
    auto sign = [&](std::size_t g, std::size_t k) {
      auto [x, xi] = h->split(g);
      auto [y, eta] = h->split(k);
      (void)xi;
      (void)y;
      return Complex(x == 1 && eta == 1 ? -1.0 : 1.0);
    };
    std::vector<Complex> sigma;
    for (std::size_t g = 0; g < 4; ++g)
      for (std::size_t k = 0; k < 4; ++k) sigma.push_back(sign(g, k));
    auto tga = twisted_group_algebra(h, sigma, kTol);
    o.require(verify_star_algebra(*tga, kTol), kTol, "algebra");
    if (tga->dim() != 4) o.fail("total dimension " + std::to_string(tga->dim()));
    const std::size_t oracle = center_dimension_oracle(*h, sign);
    if (oracle != 1) o.fail("oracle center dimension " + std::to_string(oracle));
    if (center_dimension(*tga) != oracle) o.fail("center dimension " + std::to_string(center_dimension(*tga)));
    auto fz = factorization(fixtures::z2z2_scalar(), kTol);
    o.require(fz.iso.certificate(), kTol, "factorization");
    for (std::size_t g = 0; g < 4; ++g)
      for (std::size_t k = 0; k < 4; ++k)
        if (fz.group_algebra->sigma(g, k) != sign(g, k)) o.fail("factorization sigma differs from the sign cocycle");
  });
}

Outcome negative_controls() {
  return guarded([](Outcome& o) {
    auto expect = [&](const Report& r, const std::string& id, const Tuple& witness) {
      const Check* c = r.find(id);
      if (!c) return o.fail("no check " + id);
      if (c->pass) return o.fail(id + " unexpectedly passes");
      if (!c->witness || *c->witness != witness) o.fail(id + ": wrong witness");
      if (r.first_failure() == nullptr) o.fail(id + ": report claims success");
    };
    expect(verify_group(*fixtures::broken_z3_table(), kTol), "group.associativity", Tuple{1, 1, 2});
    expect(verify_twisted_action(fixtures::broken_normalization(), kTol, "action"), "action.normalization", Tuple{1});
    expect(check_covariant(fixtures::broken_coupling(), kTol), "covariant.cocycle_tilde", Tuple{1, 1, 1});
    try {
      verify_covariant(fixtures::broken_coupling(), kTol);
      o.fail("verify_covariant accepted the broken coupling");
    } catch (const VerificationError&) {
    }
  });
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double tol;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"axiom suites on the core fixtures", kTol, axiom_suites},
      {"forward product action is a twisted action", kTol, forward_action_sweep},
      {"four-variable compatibility sweep", kLooseTol, four_variable_sweep},
      {"product actions exterior equivalent, iota verified", kTol, exterior_equivalence},
      {"four isomorphisms, diagram and dimensions", kTol, four_isomorphisms},
      {"closed-form laws match generic convolution", kTol, composition_laws},
      {"first generations and their identities", kTol, first_generations},
      {"representation correspondences", kTol, correspondences},
      {"induced representations commute through kappa", kTol, induced_commutation},
      {"duality chain", kLooseTol, takai},
      {"twisted group algebra and factorization", kTol, twisted_group_algebra_check},
      {"negative controls fail with named witnesses", 0.0, negative_controls},
  };
  int failures = 0;
  int k = 0;
  for (const auto& c : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    char tol[16] = "exact";
    if (c.tol > 0) std::snprintf(tol, sizeof tol, "%.0e", c.tol);
    std::printf("%s %2d %-52s max_residual=%.3e tol=%s %.2fs%s%s\n", o.pass ? "PASS" : "FAIL", k, c.name, o.worst, tol,
                secs, o.pass ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d of %d criteria passed\n", k - failures, k);
  return failures == 0 ? 0 : 1;
}

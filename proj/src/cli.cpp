#include "workbench/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>

#include "workbench/crossed_product.hpp"
#include "workbench/duality.hpp"
#include "workbench/generations.hpp"
#include "workbench/representations.hpp"

namespace workbench {

namespace {

Report renamed(const Report& r, const std::string& from, const std::string& to) {
  Report out;
  for (auto c : r.checks()) {
    if (c.id.rfind(from, 0) == 0) c.id = to + c.id.substr(from.size());
    out.add(std::move(c));
  }
  return out;
}

std::size_t total_dim(const StructureSpec& spec) {
  const std::size_t nt = spec.has_gt() ? spec.Gt->order() : 1;
  return spec.G->order() * nt * spec.algebra->dim();
}

void check_cap(std::size_t dim, const RunSettings& s) {
  if (dim > s.max_dim)
    throw InputError("total dimension " + std::to_string(dim) + " exceeds --max-dim " + std::to_string(s.max_dim));
}

void need_gt(const StructureSpec& spec, const std::string& cmd) {
  if (!spec.has_gt()) throw InputError(cmd + " needs a Gt group in the structure file");
}

// Verified structure, or the failing report.
std::optional<CovariantStructure> verified(const StructureSpec& spec, const RunSettings& s, Report& into) {
  try {
    auto cs = verify_covariant(spec.semi(), s.tolerance);
    into.merge(cs.certificate());
    return cs;
  } catch (const VerificationError& e) {
    into.merge(e.report);
    return std::nullopt;
  }
}

std::string num(std::size_t v) { return std::to_string(v); }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

CommandOutput cmd_verify(const StructureSpec& spec, const RunSettings& s) {
  check_cap(total_dim(spec), s);
  CommandOutput out{"verify", {}, {}};
  auto& r = out.report;
  r.merge(renamed(verify_group(*spec.G, s.tolerance), "group.", "group.G."));
  if (spec.has_gt()) r.merge(renamed(verify_group(*spec.Gt, s.tolerance), "group.", "group.Gt."));
  if (!r.ok()) return out;  // everything below presumes group laws
  r.merge(verify_star_algebra(*spec.algebra, s.tolerance));
  if (spec.has_gt())
    r.merge(check_covariant(spec.semi(), s.tolerance));
  else
    r.merge(verify_twisted_action(*spec.g, s.tolerance, "action.G"));

  // Randomized spot checks on the crossed product by G.
  auto cp = crossed_product(*spec.g);
  std::mt19937_64 rng(s.seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  auto draw = [&] {
    Vec v(static_cast<Eigen::Index>(cp->dim()));
    for (auto& c : v) c = Complex(nd(rng), nd(rng));
    return v;
  };
  double assoc = 0.0, inv = 0.0;
  for (int k = 0; k < 8; ++k) {
    Vec f = draw(), g = draw(), h = draw();
    assoc = std::max(assoc, residual(cp->convolve(cp->convolve(f, g), h), cp->convolve(f, cp->convolve(g, h))));
    inv = std::max(inv, residual(cp->involute(cp->convolve(f, g)), cp->convolve(cp->involute(g), cp->involute(f))));
  }
  // random elements have entries of order one; scale the tolerance with the dimension
  const double spot_tol = s.tolerance * static_cast<double>(cp->dim());
  r.add(single("spot.crossed_product.associativity", "(f g) h = f (g h) on seeded random elements", assoc, spot_tol));
  r.add(single("spot.crossed_product.involution", "(f g)* = g* f* on seeded random elements", inv, spot_tol));
  out.info.push_back({"dim.A", num(spec.algebra->dim())});
  out.info.push_back({"order.G", num(spec.G->order())});
  if (spec.has_gt()) out.info.push_back({"order.Gt", num(spec.Gt->order())});
  return out;
}

CommandOutput cmd_build(const StructureSpec& spec, const RunSettings& s) {
  need_gt(spec, "build");
  check_cap(total_dim(spec), s);
  CommandOutput out{"build", {}, {}};
  auto& r = out.report;
  auto cs = verified(spec, s, r);
  if (!cs) return out;
  r.merge(check_product_actions(*cs, s.tolerance));
  auto b = build_bundle(*cs, s.tolerance);
  r.merge(renamed(b.B.structure.certificate(), "", "first_G.structure."));
  r.merge(check_first_generation_G(*cs, b.B, s.tolerance));
  r.merge(renamed(b.C.structure.certificate(), "", "first_Gt.structure."));
  r.merge(check_first_generation_Gtilde(*cs, b.C, s.tolerance));
  r.merge(renamed(verify_star_algebra(*b.BGt, s.tolerance), "algebra.", "algebra.BGt."));
  r.merge(renamed(verify_star_algebra(*b.CG, s.tolerance), "algebra.", "algebra.CG."));
  r.merge(renamed(verify_star_algebra(*b.forward, s.tolerance), "algebra.", "algebra.forward."));
  r.merge(renamed(verify_star_algebra(*b.backward, s.tolerance), "algebra.", "algebra.backward."));
  r.merge(check_composition_laws(b, s.tolerance));
  out.info.push_back({"dim.B", num(b.B.algebra->dim())});
  out.info.push_back({"dim.C", num(b.C.algebra->dim())});
  out.info.push_back({"dim.BGt", num(b.BGt->dim())});
  out.info.push_back({"dim.CG", num(b.CG->dim())});
  out.info.push_back({"dim.forward", num(b.forward->dim())});
  out.info.push_back({"dim.backward", num(b.backward->dim())});
  return out;
}

CommandOutput cmd_iso(const StructureSpec& spec, const RunSettings& s) {
  need_gt(spec, "iso");
  check_cap(total_dim(spec), s);
  CommandOutput out{"iso", {}, {}};
  auto& r = out.report;
  auto cs = verified(spec, s, r);
  if (!cs) return out;
  auto b = build_bundle(*cs, s.tolerance);
  r.merge(check_isomorphisms(b, s.tolerance));
  auto cr = induce(*cs, materialization(cs->algebra()));
  r.merge(verify_covariant_rep(*cs, cr, s.tolerance, "induced"));
  r.merge(check_correspondence(b, cr, s.tolerance));
  for (const auto& iso : {iso_gamma(b, s.tolerance), iso_upsilon(b, s.tolerance), iso_phi(b, s.tolerance),
                          iso_psi(b, s.tolerance)})
    out.info.push_back({"condition." + iso.name(), sci(iso.condition_number())});
  out.info.push_back({"dim", num(b.forward->dim())});
  return out;
}

CommandOutput cmd_takai(const StructureSpec& spec, const RunSettings& s) {
  if (!spec.G->is_abelian() || !spec.G->cyclic_decomposition())
    throw InputError("takai needs an abelian G given as a product of cyclic groups");
  const std::size_t dim = spec.G->order() * spec.G->order() * spec.algebra->dim();
  check_cap(dim, s);
  CommandOutput out{"takai", {}, {}};
  try {
    auto chain = takai_chain(*spec.g, s.tolerance);
    out.report = chain.report();
    for (const auto& a : chain.arrows) out.info.push_back({"condition." + a.name(), sci(a.condition_number())});
    out.info.push_back({"dim.final", num(chain.final_algebra->dim())});
  } catch (const VerificationError& e) {
    out.report = e.report;
  }
  return out;
}

namespace {

std::string witness_text(const Tuple& t) {
  std::string w = "(";
  for (std::size_t i = 0; i < t.size(); ++i) w += (i ? "," : "") + std::to_string(t[i]);
  return w + ")";
}

std::size_t failed(const Report& r) {
  std::size_t n = 0;
  for (const auto& c : r.checks()) n += !c.pass;
  return n;
}

std::string display_name(const StructureSpec& spec) { return std::filesystem::path(spec.name).filename().string(); }

}  // namespace

std::string render_text(const StructureSpec& spec, const RunSettings& s, const CommandOutput& out) {
  std::ostringstream os;
  os << "workbench " << kToolVersion << " " << out.command << "\n";
  os << "input " << display_name(spec) << " fnv1a64 " << fnv1a_hex(spec.text) << "\n";
  os << "tolerance " << sci(s.tolerance) << " seed " << s.seed << "\n";
  for (const auto& c : out.report.checks()) {
    os << (c.pass ? "PASS " : "FAIL ") << c.id << " max_residual=" << sci(c.max_residual);
    if (c.witness) os << " witness=" << witness_text(*c.witness);
    if (!c.pass) os << " law: " << c.law;
    os << "\n";
  }
  for (const auto& [k, v] : out.info) os << "info " << k << " " << v << "\n";
  const std::size_t nf = failed(out.report);
  os << "result " << (nf == 0 ? "PASS" : "FAIL") << " " << out.report.checks().size() << " checks, " << nf
     << " failed, max_residual=" << sci(out.report.max_residual()) << "\n";
  return os.str();
}

std::string render_json(const StructureSpec& spec, const RunSettings& s, const CommandOutput& out) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["tool"] = "workbench";
  j["version"] = kToolVersion;
  j["command"] = out.command;
  j["input"] = display_name(spec);
  j["input_digest"] = "fnv1a64:" + fnv1a_hex(spec.text);
  j["tolerance"] = s.tolerance;
  j["seed"] = s.seed;
  ordered_json checks = ordered_json::array();
  for (const auto& c : out.report.checks()) {
    ordered_json o;
    o["id"] = c.id;
    o["law"] = c.law;
    o["max_residual"] = c.max_residual;
    o["witness"] = c.witness ? ordered_json(*c.witness) : ordered_json(nullptr);
    o["pass"] = c.pass;
    checks.push_back(std::move(o));
  }
  j["checks"] = std::move(checks);
  ordered_json info = ordered_json::object();
  for (const auto& [k, v] : out.info) info[k] = v;
  j["info"] = std::move(info);
  const std::size_t nf = failed(out.report);
  j["summary"] = {{"checks", out.report.checks().size()}, {"failed", nf}, {"pass", nf == 0},
                  {"max_residual", out.report.max_residual()}};
  return j.dump(2) + "\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite covariant-structure workbench"};
  std::string command, path;
  bool json = false;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::size_t max_dim = 4096;
  app.add_option("command", command, "verify | build | iso | takai")
      ->required()
      ->check(CLI::IsMember({"verify", "build", "iso", "takai"}));
  app.add_option("specfile", path, "structure file")->required();
  app.add_flag("--json", json, "machine-readable report");
  app.add_option("--tolerance", tolerance, "residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized spot checks");
  app.add_option("--max-dim", max_dim, "refuse structures whose total dimension exceeds this")
      ->check(CLI::PositiveNumber);
  app.set_version_flag("--version", kToolVersion);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    StructureSpec spec = load_spec(path);
    RunSettings s;
    s.tolerance = tolerance.value_or(spec.tolerance.value_or(kDefaultTolerance));
    s.seed = seed.value_or(spec.seed.value_or(0));
    s.max_dim = max_dim;
    CommandOutput result = command == "verify" ? cmd_verify(spec, s)
                           : command == "build" ? cmd_build(spec, s)
                           : command == "iso"   ? cmd_iso(spec, s)
                                                : cmd_takai(spec, s);
    out << (json ? render_json(spec, s, result) : render_text(spec, s, result));
    return result.report.ok() ? 0 : 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace workbench

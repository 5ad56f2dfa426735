#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "workbench/cli.hpp"

using namespace workbench;

namespace {

const std::string kDir = FIXTURE_DIR;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "workbench");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kDir + "/" + name + ".spec"; }

nlohmann::json run_json(const std::string& cmd, const std::string& name) {
  auto r = run({cmd, fixture(name), "--json"});
  return nlohmann::json::parse(r.out);
}

const nlohmann::json* find_check(const nlohmann::json& j, const std::string& id) {
  for (const auto& c : j["checks"])
    if (c["id"] == id) return &c;
  return nullptr;
}

// Exit status of the real binary, output discarded.
int binary_status(const std::string& args) {
  const std::string cmd = std::string(WORKBENCH_BIN) + " " + args + " >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("verify passes on the core fixtures") {
  for (const char* name : {"trivial", "z2z2_scalar", "pauli", "s3_trivial", "m2_z3_trivial"}) {
    CAPTURE(name);
    auto r = run({"verify", fixture(name)});
    CHECK(r.code == 0);
    CHECK(r.out.find("result PASS") != std::string::npos);
  }
}

TEST_CASE("build and iso pass on z2z2") {
  auto b = run_json("build", "z2z2_scalar");
  CHECK(b["summary"]["pass"] == true);
  CHECK(b["info"]["dim.forward"] == "16");
  auto i = run_json("iso", "z2z2_scalar");
  CHECK(i["summary"]["pass"] == true);
  for (const char* id : {"gamma.multiplicative", "upsilon.multiplicative", "phi.multiplicative",
                         "psi.multiplicative", "bundle.diagram", "correspondence.phi"}) {
    CAPTURE(id);
    auto c = find_check(i, id);
    REQUIRE(c != nullptr);
    CHECK((*c)["pass"] == true);
  }
}

TEST_CASE("takai on m2_z3 reaches dimension 36") {
  auto j = run_json("takai", "m2_z3_trivial");
  CHECK(j["summary"]["pass"] == true);
  CHECK(j["info"]["dim.final"] == "36");
}

TEST_CASE("takai rejects a nonabelian group") {
  auto r = run({"takai", fixture("s3_trivial")});
  CHECK(r.code == 2);
  CHECK(r.err.find("abelian") != std::string::npos);
}

TEST_CASE("broken fixtures fail with witnesses") {
  struct Case {
    const char* file;
    const char* id;
    std::vector<int> witness;
  };
  for (const Case& c : {Case{"broken_z3_table", "group.G.associativity", {1, 1, 2}},
                        Case{"broken_normalization", "action.G.normalization", {1}},
                        Case{"broken_coupling", "covariant.cocycle_tilde", {1, 1, 1}}}) {
    CAPTURE(c.file);
    auto r = run({"verify", fixture(c.file), "--json"});
    CHECK(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["pass"] == false);
    auto chk = find_check(j, c.id);
    REQUIRE(chk != nullptr);
    CHECK((*chk)["pass"] == false);
    CHECK((*chk)["witness"].get<std::vector<int>>() == c.witness);
  }
}

TEST_CASE("identical invocations give byte-identical output") {
  for (const char* cmd : {"verify", "build", "iso"}) {
    auto a = run({cmd, fixture("pauli"), "--seed", "11"});
    auto b = run({cmd, fixture("pauli"), "--seed", "11"});
    CHECK(a.out == b.out);
    auto ja = run({cmd, fixture("pauli"), "--json"});
    auto jb = run({cmd, fixture("pauli"), "--json"});
    CHECK(ja.out == jb.out);
  }
}

TEST_CASE("report header carries version, digest and settings") {
  auto j = run_json("verify", "trivial");
  CHECK(j["version"] == kToolVersion);
  CHECK(j["input"] == "trivial.spec");
  CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(j["seed"] == 0);
  auto r = run({"verify", fixture("trivial"), "--tolerance", "1e-6", "--seed", "5", "--json"});
  auto k = nlohmann::json::parse(r.out);
  CHECK(k["tolerance"] == doctest::Approx(1e-6));
  CHECK(k["seed"] == 5);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"verify", fixture("missing")}).code == 2);
  CHECK(run({"frobnicate", fixture("trivial")}).code == 2);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"build", fixture("c_z2")}).code == 2);  // no Gt
  auto capped = run({"build", fixture("s3_trivial"), "--max-dim", "100"});
  CHECK(capped.code == 2);
  CHECK(capped.err.find("max-dim") != std::string::npos);
}

TEST_CASE("the binary's exit status follows the report") {
  CHECK(binary_status("verify " + fixture("pauli")) == 0);
  CHECK(binary_status("verify " + fixture("broken_coupling")) == 1);
  CHECK(binary_status("verify " + fixture("nope")) == 2);
  CHECK(binary_status("--help") == 0);
}

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "workbench/report.hpp"
#include "workbench/spec_format.hpp"

namespace workbench {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunSettings {
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  std::size_t max_dim = 4096;
};

struct CommandOutput {
  std::string command;
  Report report;
  std::vector<std::pair<std::string, std::string>> info;
};

// Each command throws InputError for inputs it cannot handle (missing Gt, nonabelian
// group for takai, dimension above max_dim) and otherwise reports failures as checks.
CommandOutput cmd_verify(const StructureSpec& spec, const RunSettings& s);
CommandOutput cmd_build(const StructureSpec& spec, const RunSettings& s);
CommandOutput cmd_iso(const StructureSpec& spec, const RunSettings& s);
CommandOutput cmd_takai(const StructureSpec& spec, const RunSettings& s);

std::string render_text(const StructureSpec& spec, const RunSettings& s, const CommandOutput& out);
std::string render_json(const StructureSpec& spec, const RunSettings& s, const CommandOutput& out);

// verify|build|iso|takai <specfile> [--json] [--tolerance t] [--seed s] [--max-dim d]
// Returns 0 when every check passes, 1 on a check failure, 2 on an input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace workbench

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "workbench/covariant.hpp"

namespace workbench {

// Syntax or semantic error in a structure file, positioned at a 1-based line and column.
struct SpecError : InputError {
  SpecError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line, column;
};

// A parsed structure file. G is required; Gt, its action and the coupling are
// optional so that single-group inputs (takai) can share the format.
struct StructureSpec {
  std::string name;
  std::string text;
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::shared_ptr<const MatrixDirectSum> algebra;
  GroupPtr G, Gt;
  std::optional<TwistedAction> g, gt;
  std::vector<Vec> coupling;

  bool has_gt() const { return Gt != nullptr; }
  // Throws InputError when there is no Gt.
  SemiCovariantStructure semi() const;
};

// Statements (one per line, '#' starts a comment):
//   tolerance 1e-9
//   seed 7
//   algebra 2 1                        block sizes of the matrix direct sum
//   unitary NAME phase 1/4             scalar exp(2 pi i / 4)
//   unitary NAME                       full block-diagonal matrix, one row per line
//     row 0 1
//     row 1 0
//   end
//   group G cyclic 3 | product 2 2 | symmetric 3 | table ... end
//   group Gt dual G
//   action G trivial
//   action G                           one line per non-identity element
//     1 ad NAME | 1 trivial | 1 perm 1 0 [NAME]
//   end
//   cocycle G trivial
//   cocycle G                          pairs involving the identity default to 1
//     1 1 phase 1/2 | 1 2 unitary NAME
//   end
//   coupling trivial | coupling pairing | coupling ... end (same entries as cocycle)
// Complex entries: 1, -0.5, 2i, -i, 0.5+0.25i, 1e-3-2e-1i.
StructureSpec parse_spec(const std::string& text, const std::string& name = "<input>");
StructureSpec load_spec(const std::string& path);

// FNV-1a 64-bit hash, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace workbench

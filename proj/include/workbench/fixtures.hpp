#pragma once

#include <functional>
#include <string>
#include <vector>

#include "workbench/covariant.hpp"

namespace workbench::fixtures {

// M2 with Z2 and Z2 acting trivially, kappa = 1.
CovariantStructure trivial();
// M2, G = Gt = Z2, trivial actions, kappa(x,xi) = (-1)^{x xi}.
CovariantStructure z2z2_scalar();
// M2, Gt = Z2 by ad(Z), rho_1 = X, kappa(1,1) = -1; the G side is ad(rho).
CovariantStructure pauli();
// Roles swapped: G = Z2 by ad(Z), rhot_1 = X, kappa(1,1) = -1.
CovariantStructure pauli_mirror();
// Gt = Z2 by ad(H), rho_1 = X, kappa(1,1) = XZ (not scalar).
CovariantStructure pauli_hadamard();
// G = Z2 x Z2 by ad(1, Z, X, XZ) with a sign cocycle, Gt = Z2 by ad(Y).
CovariantStructure pauli_twisted();
// M3, S3 by permutation matrices, Z2 by the reflection 1 - (2/3) J, kappa = 1.
CovariantStructure s3_trivial();
// Standard Takai structure of M2 with Z3 acting trivially.
CovariantStructure m2_z3_trivial();

// Inputs of the Takai chain.
TwistedAction takai_c_z2();
TwistedAction takai_m2_z3();
TwistedAction takai_m2_z2_adx();

struct Named {
  std::string name;
  std::function<CovariantStructure()> build;
};

// trivial, z2z2_scalar, pauli, s3_trivial, m2_z3_trivial
const std::vector<Named>& core();
// core plus the remaining Pauli structures
const std::vector<Named>& all();

// Negative controls.
GroupPtr broken_z3_table();                      // mul(1,1) = 0
TwistedAction broken_normalization();            // alpha(e,1) = -1
SemiCovariantStructure broken_coupling();        // z2z2_scalar with kappa(1,1) = i

}  // namespace workbench::fixtures

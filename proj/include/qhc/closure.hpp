#pragma once

#include <vector>

#include "qhc/basis.hpp"
#include "qhc/pauli.hpp"
#include "qhc/skew.hpp"

namespace qhc::pauli {

/// Lie closure of i-Pauli generators via a symplectic worklist: the bracket
/// of two anticommuting strings is a real multiple of i times their product,
/// so membership reduces to set operations on (x, z) masks. Signs are
/// tracked through the products but do not affect membership. The result is
/// a Pauli-frame basis sorted by string index.
OrthonormalBasis lie_closure_strings(int n, const std::vector<PauliString>& generators);

/// Smallest Lie subalgebra containing the generators, as an orthonormal
/// basis. Generators that are single i-Pauli multiples take the worklist
/// path; anything else falls back to bracket sweeps with dense
/// Gram-Schmidt and the given new-direction threshold.
OrthonormalBasis lie_closure(const std::vector<SkewHermitian>& generators,
                             double new_direction_tol = 1e-9);

}

#pragma once

#include <cstdint>
#include <vector>

#include "qhc/solver.hpp"

namespace qhc::io {

struct SweepEntry {
    /// Image of vertex i under the relabeling.
    std::vector<int> permutation;
    double residual = 0.0;
    bool accessible = false;
};

/// Re-solves the problem under vertex relabelings of its connectivity graph
/// and reports each residual, sorted ascending with lexicographic
/// permutation order breaking ties. Enumerates every permutation for
/// n <= 8 (optionally capped by max_perms > 0, taking the lexicographically
/// first ones); samples max_perms (default 100) seeded permutations above.
/// Requires the problem to carry a connectivity graph.
std::vector<SweepEntry> permutation_sweep(const solver::CompilationProblem& p,
                                          int max_perms, std::uint64_t seed = 0);

}

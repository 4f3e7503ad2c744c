#pragma once

#include <utility>
#include <vector>

#include "qhc/pauli.hpp"

namespace qhc::pauli {

/// Hardware connectivity: physical qubits 0..n-1 and undirected coupling
/// edges. Edges are stored normalized (low index first) and sorted.
struct ConnectivityGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    /// Validates (no self-loops, indices < n), normalizes and deduplicates.
    static ConnectivityGraph from_edges(int n, std::vector<std::pair<int, int>> edges);

    /// The graph with vertex i relabeled to permutation[i].
    ConnectivityGraph relabeled(const std::vector<int>& permutation) const;
};

/// Generators of the accessible algebra: for each edge (i, j), the
/// same-letter two-qubit strings X_i X_j, Y_i Y_j, Z_i Z_j.
std::vector<PauliString> graph_generators(const ConnectivityGraph& g);

}

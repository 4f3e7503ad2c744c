#include "qhc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qhc::pauli {

ConnectivityGraph ConnectivityGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) {
        throw std::invalid_argument("ConnectivityGraph: vertex count must be positive");
    }
    for (auto& [a, b] : edges) {
        if (a == b) {
            throw std::invalid_argument("ConnectivityGraph: self-loop at vertex " +
                                        std::to_string(a));
        }
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw std::invalid_argument("ConnectivityGraph: edge (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ") outside vertex range 0.." +
                                        std::to_string(n - 1));
        }
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return ConnectivityGraph{n, std::move(edges)};
}

ConnectivityGraph ConnectivityGraph::relabeled(const std::vector<int>& permutation) const {
    if (static_cast<int>(permutation.size()) != n) {
        throw std::invalid_argument("ConnectivityGraph: permutation length mismatch");
    }
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        out.emplace_back(permutation.at(a), permutation.at(b));
    }
    return from_edges(n, std::move(out));
}

std::vector<PauliString> graph_generators(const ConnectivityGraph& g) {
    std::vector<PauliString> out;
    out.reserve(3 * g.edges.size());
    for (const auto& [i, j] : g.edges) {
        const std::uint64_t bi = 1ull << (g.n - 1 - i);
        const std::uint64_t bj = 1ull << (g.n - 1 - j);
        out.emplace_back(g.n, bi | bj, 0, 0);            // X_i X_j
        out.emplace_back(g.n, bi | bj, bi | bj, 0);      // Y_i Y_j
        out.emplace_back(g.n, 0, bi | bj, 0);            // Z_i Z_j
    }
    return out;
}

}

#include "qhc/sweep.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qhc/closure.hpp"
#include "qhc/graph.hpp"

namespace qhc::io {

namespace {

std::vector<std::vector<int>> enumerate_permutations(int n, int max_perms) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
        if (max_perms > 0 && int(out.size()) >= max_perms) {
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::vector<int>> sample_permutations(int n, int count, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    out.reserve(std::size_t(count));
    for (int i = 0; i < count; ++i) {
        std::shuffle(perm.begin(), perm.end(), gen);
        out.push_back(perm);
    }
    return out;
}

}  // namespace

std::vector<SweepEntry> permutation_sweep(const solver::CompilationProblem& p,
                                          int max_perms, std::uint64_t seed) {
    p.validate();
    if (!p.connectivity.has_value()) {
        throw std::invalid_argument("permutation_sweep: problem carries no connectivity graph");
    }
    const int n = p.connectivity->n;
    if (n != p.code.n) {
        throw std::invalid_argument("permutation_sweep: graph size does not match code");
    }
    const std::vector<std::vector<int>> perms =
        n <= 8 ? enumerate_permutations(n, max_perms)
               : sample_permutations(n, max_perms > 0 ? max_perms : 100, seed);

    std::vector<SweepEntry> entries(perms.size());
    // Fan out one full solve per relabeling; each slot is written by exactly
    // one iteration, and the inner solves run serial to keep the work flat.
    parallel_for(p.policy, perms.size(), [&](std::size_t i) {
        solver::CompilationProblem relabeled = p;
        relabeled.policy = ExecPolicy::serial;
        relabeled.connectivity = p.connectivity->relabeled(perms[i]);
        relabeled.accessible = pauli::lie_closure_strings(
            n, pauli::graph_generators(*relabeled.connectivity));
        const solver::CompilationResult result = solver::solve(relabeled);
        entries[i] = SweepEntry{perms[i], result.residual, result.accessible};
    });
    std::sort(entries.begin(), entries.end(),
              [](const SweepEntry& a, const SweepEntry& b) {
                  if (a.residual != b.residual) {
                      return a.residual < b.residual;
                  }
                  return a.permutation < b.permutation;
              });
    return entries;
}

}

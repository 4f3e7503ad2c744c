#include "qhc/closure.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <unordered_set>

namespace qhc::pauli {

namespace {

/// Extracts the single string of a when a = c * (i P) for a real c and a
/// sign-free P; returns nullopt otherwise.
std::optional<PauliString> single_string_of(const SkewHermitian& a, double tol) {
    const int n = qubits_for_dim(a.dim());
    const Eigen::VectorXd coords = vectorize(a);
    const double norm = coords.norm();
    if (norm <= tol) return std::nullopt;
    Eigen::Index lead = 0;
    coords.cwiseAbs().maxCoeff(&lead);
    Eigen::VectorXd rest = coords;
    rest(lead) = 0;
    if (rest.norm() > tol * norm) return std::nullopt;
    const std::uint64_t key = static_cast<std::uint64_t>(lead) + 1;
    const std::uint64_t dim_mask = (1ull << n) - 1;
    return PauliString(n, key >> n, key & dim_mask, 0);
}

}  // namespace

OrthonormalBasis lie_closure_strings(int n, const std::vector<PauliString>& generators) {
    std::vector<PauliString> members;
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::size_t> frontier;
    for (const PauliString& g : generators) {
        if (g.n() != n) {
            throw std::invalid_argument("lie_closure_strings: generator qubit count mismatch");
        }
        if (g.is_identity()) continue;
        if (seen.insert(g.index()).second) {
            members.push_back(g);
            frontier.push_back(members.size() - 1);
        }
    }
    while (!frontier.empty()) {
        const std::size_t pi = frontier.front();
        frontier.pop_front();
        // members grows during iteration; brackets against later additions
        // are covered when those additions leave the frontier themselves.
        for (std::size_t qi = 0; qi < members.size(); ++qi) {
            const PauliString p = members[pi];
            const PauliString q = members[qi];
            if (p.commutes_with(q)) continue;
            const PauliString product = p * q;
            if (seen.insert(product.index()).second) {
                members.push_back(product);
                frontier.push_back(members.size() - 1);
            }
        }
    }
    std::sort(members.begin(), members.end(),
              [](const PauliString& a, const PauliString& b) { return a.index() < b.index(); });
    return OrthonormalBasis::from_pauli_strings(n, members);
}

OrthonormalBasis lie_closure(const std::vector<SkewHermitian>& generators,
                             double new_direction_tol) {
    if (generators.empty()) {
        return OrthonormalBasis::from_dense({});
    }
    const Eigen::Index dim = generators.front().dim();
    const int n = qubits_for_dim(dim);

    std::vector<PauliString> strings;
    bool all_pauli = true;
    for (const SkewHermitian& g : generators) {
        if (g.dim() != dim) {
            throw std::invalid_argument("lie_closure: generator dimension mismatch");
        }
        if (g.hs_norm() <= new_direction_tol) continue;  // drop zero generators
        const auto s = single_string_of(g, 1e-12);
        if (!s) {
            all_pauli = false;
            break;
        }
        strings.push_back(*s);
    }
    if (all_pauli) {
        return lie_closure_strings(n, strings);
    }

    // Dense fallback: orthonormalize the generators, then sweep over bracket
    // pairs until a full sweep adds no new direction.
    std::vector<SkewHermitian> basis;
    auto try_add = [&](const Eigen::MatrixXcd& m) {
        Eigen::MatrixXcd residual = m;
        for (int sweep = 0; sweep < 2; ++sweep) {
            for (const SkewHermitian& k : basis) {
                const std::complex<double> c =
                    k.matrix().conjugate().cwiseProduct(residual).sum();
                residual -= c.real() * k.matrix();
            }
        }
        const double norm = residual.norm();
        if (norm > new_direction_tol) {
            basis.push_back(SkewHermitian::unchecked(residual / norm));
            return true;
        }
        return false;
    };
    for (const SkewHermitian& g : generators) {
        if (g.hs_norm() > new_direction_tol) try_add(g.matrix());
    }
    const std::size_t max_dim = (std::size_t(1) << (2 * n)) - 1;
    bool grew = true;
    while (grew && basis.size() < max_dim) {
        grew = false;
        const std::size_t frozen = basis.size();
        for (std::size_t i = 0; i < frozen; ++i) {
            for (std::size_t j = i + 1; j < frozen; ++j) {
                const Eigen::MatrixXcd br = basis[i].matrix() * basis[j].matrix() -
                                            basis[j].matrix() * basis[i].matrix();
                if (br.norm() <= new_direction_tol) continue;
                if (try_add(br)) grew = true;
            }
        }
    }
    return OrthonormalBasis::from_dense(std::move(basis), false);
}

}

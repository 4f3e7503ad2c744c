#pragma once

// Independent reference implementations used to check library results.
// Everything here is built from first principles (Kronecker products, dense
// Gram-Schmidt, Taylor series) rather than the library's bitmask and
// eigendecomposition paths.

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qhc/closure.hpp"
#include "qhc/code.hpp"
#include "qhc/graph.hpp"
#include "qhc/skew.hpp"
#include "qhc/solver.hpp"

namespace oracles {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

inline Eigen::MatrixXcd single_qubit(char letter) {
    const std::complex<double> i(0.0, 1.0);
    Eigen::MatrixXcd m(2, 2);
    switch (letter) {
        case 'I':
            m << 1, 0, 0, 1;
            return m;
        case 'X':
            m << 0, 1, 1, 0;
            return m;
        case 'Y':
            m << 0, -i, i, 0;
            return m;
        case 'Z':
            m << 1, 0, 0, -1;
            return m;
        default:
            throw std::invalid_argument("oracle: bad Pauli letter");
    }
}

/// Kronecker-product Pauli from a plain letter label, qubit 0 leftmost.
inline Eigen::MatrixXcd dense_pauli(const std::string& label) {
    Eigen::MatrixXcd out = single_qubit(label.at(0));
    for (std::size_t q = 1; q < label.size(); ++q) {
        out = kron(out, single_qubit(label.at(q)));
    }
    return out;
}

/// Taylor-series exponential with scaling and squaring; independent of the
/// library's eigendecomposition route.
inline Eigen::MatrixXcd taylor_expm(const Eigen::MatrixXcd& a) {
    int scaling = 0;
    double norm = a.norm();
    while (norm > 0.5) {
        norm /= 2.0;
        ++scaling;
    }
    const Eigen::MatrixXcd scaled = a / double(1 << scaling);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(a.rows(), a.cols());
    Eigen::MatrixXcd sum = term;
    for (int k = 1; k < 40; ++k) {
        term = (term * scaled) / double(k);
        sum += term;
        if (term.norm() < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < scaling; ++s) {
        sum = sum * sum;
    }
    return sum;
}

/// Flattens a complex matrix into a real vector for inner-product geometry.
inline Eigen::VectorXd flatten(const Eigen::MatrixXcd& m) {
    Eigen::VectorXd v(2 * m.size());
    Eigen::Index idx = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            v(idx++) = m(r, c).real();
            v(idx++) = m(r, c).imag();
        }
    }
    return v;
}

/// Dense span tracker with Gram-Schmidt; the reference for closure
/// dimensions and projection residuals.
class DenseSpan {
public:
    bool add(const Eigen::MatrixXcd& m, double tol = 1e-9) {
        Eigen::VectorXd v = flatten(m);
        const double original = v.norm();
        if (original <= tol) {
            return false;
        }
        for (int pass = 0; pass < 2; ++pass) {
            for (const Eigen::VectorXd& q : basis_) {
                v -= q.dot(v) * q;
            }
        }
        if (v.norm() <= tol * std::max(1.0, original)) {
            return false;
        }
        v /= v.norm();
        basis_.push_back(std::move(v));
        matrices_.push_back(m);
        return true;
    }

    double residual(const Eigen::MatrixXcd& m) const {
        Eigen::VectorXd v = flatten(m);
        for (int pass = 0; pass < 2; ++pass) {
            for (const Eigen::VectorXd& q : basis_) {
                v -= q.dot(v) * q;
            }
        }
        return v.norm();
    }

    std::size_t size() const { return basis_.size(); }
    const std::vector<Eigen::MatrixXcd>& matrices() const { return matrices_; }

private:
    std::vector<Eigen::VectorXd> basis_;
    std::vector<Eigen::MatrixXcd> matrices_;
};

/// Bracket-sweep closure over dense matrices; returns the span.
inline DenseSpan dense_closure(const std::vector<Eigen::MatrixXcd>& generators,
                               double tol = 1e-9) {
    DenseSpan span;
    for (const Eigen::MatrixXcd& g : generators) {
        span.add(g, tol);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Eigen::MatrixXcd> current = span.matrices();
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                const Eigen::MatrixXcd b = current[i] * current[j] - current[j] * current[i];
                if (span.add(b, tol)) {
                    grew = true;
                }
            }
        }
    }
    return span;
}

/// Seeded Gaussian traceless skew-Hermitian matrix.
inline qhc::pauli::SkewHermitian random_skew(Eigen::Index dim, std::uint64_t seed,
                                             double scale = 1.0) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXcd a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            a(r, c) = std::complex<double>(dist(gen), dist(gen));
        }
    }
    Eigen::MatrixXcd h = 0.5 * scale * (a - a.adjoint().eval());
    h -= (h.trace() / double(dim)) * Eigen::MatrixXcd::Identity(dim, dim);
    return qhc::pauli::SkewHermitian(std::move(h));
}

/// Seeded special-unitary matrix (exponential of a random traceless skew).
inline Eigen::MatrixXcd random_special_unitary(Eigen::Index dim, std::uint64_t seed) {
    return taylor_expm(random_skew(dim, seed).matrix());
}

struct RandomInstance {
    qhc::code::CodeSpec code;
    qhc::code::LogicalHamiltonian h_logical;
    qhc::pauli::OrthonormalBasis accessible;
    qhc::pauli::ConnectivityGraph graph;
};

/// Small seeded problem: random special-unitary encoder, random logical
/// Pauli sum, random connectivity graph with its closed algebra.
inline RandomInstance random_instance(int n, int k, std::uint64_t seed) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    qhc::code::CodeSpec code =
        qhc::code::CodeSpec::make(n, k, 0, random_special_unitary(dim, seed * 7 + 1));

    std::mt19937_64 gen(seed * 13 + 5);
    std::normal_distribution<double> dist(0.0, 1.0);
    qhc::pauli::PauliSum sum(k);
    for (const qhc::pauli::PauliString& p : qhc::pauli::all_strings(k)) {
        if (p.index() != 0) {
            sum.add(p, dist(gen));
        }
    }
    qhc::code::LogicalHamiltonian h =
        qhc::code::LogicalHamiltonian::make(k, sum.to_skew());

    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            all_edges.emplace_back(i, j);
        }
    }
    std::shuffle(all_edges.begin(), all_edges.end(), gen);
    const std::size_t count =
        1 + std::size_t(gen() % std::max<std::size_t>(1, all_edges.size()));
    all_edges.resize(std::min(count, all_edges.size()));
    qhc::pauli::ConnectivityGraph graph =
        qhc::pauli::ConnectivityGraph::from_edges(n, all_edges);
    qhc::pauli::OrthonormalBasis accessible =
        qhc::pauli::lie_closure_strings(n, qhc::pauli::graph_generators(graph));
    return RandomInstance{std::move(code), std::move(h), std::move(accessible),
                          std::move(graph)};
}

inline qhc::solver::CompilationProblem problem_from(const RandomInstance& inst) {
    return qhc::solver::CompilationProblem{
        inst.code,
        inst.h_logical,
        inst.accessible,
        qhc::solver::SolveMode::plain,
        0.0,
        qhc::solver::WeightMap{},
        1e-10,
        1e-8,
        qhc::ExecPolicy::serial,
        inst.graph,
    };
}

}  // namespace oracles

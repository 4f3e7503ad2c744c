#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include <Eigen/Dense>

#include "qhc/basis.hpp"
#include "qhc/code.hpp"
#include "qhc/graph.hpp"
#include "qhc/kernels.hpp"
#include "qhc/skew.hpp"

namespace qhc::solver {

enum class SolveMode { plain, fast, weighted, regularized };

/// Nonnegative weight per Pauli coordinate of su(2^n): a default applied
/// everywhere plus per-string overrides keyed by PauliString::index.
struct WeightMap {
    double default_weight = 1.0;
    std::map<std::uint64_t, double> overrides;

    double weight_for(std::uint64_t pauli_index) const;
    /// The diagonal of J over the 4^n - 1 coordinates, index order.
    Eigen::VectorXd diagonal(int n) const;
    void validate() const;
};

struct AdmmParams {
    double rho = 1.0;
    double abs_tol = 1e-8;
    double rel_tol = 1e-6;
    int max_iterations = 10000;
};

struct AdmmInfo {
    int iterations = 0;
    bool converged = false;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
};

struct CompilationProblem {
    code::CodeSpec code;
    code::LogicalHamiltonian h_logical;
    pauli::OrthonormalBasis accessible;
    SolveMode mode = SolveMode::plain;
    double lambda = 0.0;
    WeightMap weights;
    double svd_tol = 1e-10;
    double accessibility_tol = 1e-8;
    ExecPolicy policy = ExecPolicy::serial;
    /// Present when the accessible basis came from a hardware graph; the
    /// permutation sweep rebuilds closures from relabelings of it.
    std::optional<pauli::ConnectivityGraph> connectivity;

    void validate() const;
};

struct CompilationResult {
    /// Stabilizer block before embedding, dim 2^n - 2^k.
    pauli::SkewHermitian h_stabilizer;
    /// C K (0 + h_stabilizer) K^dag C^dag, dim 2^n.
    pauli::SkewHermitian h_correction;
    /// Naive encoding plus correction.
    pauli::SkewHermitian h_total;
    /// Gell-Mann coordinates of h_stabilizer.
    Eigen::VectorXd stabilizer_coords;
    /// Value of the minimized 2-norm objective.
    double residual = 0.0;
    bool accessible = false;
    pauli::PauliSum pauli_terms;
    double solve_seconds = 0.0;
    std::optional<AdmmInfo> admm;
};

/// Hilbert-Schmidt distance of h from span(basis).
double accessibility_residual(const pauli::SkewHermitian& h,
                              const pauli::OrthonormalBasis& basis);

struct CorrectibilityResult {
    bool accessible = false;
    double residual = 0.0;
    /// Dimension of the joint accessible + stabilizer span.
    std::size_t joint_dim = 0;
};

/// Whether h_encoded lies in the span of the accessible algebra together
/// with the code's stabilizer subalgebra, i.e. is accessible after some
/// stabilizer correction.
CorrectibilityResult is_correctibly_accessible(const pauli::SkewHermitian& h_encoded,
                                               const code::CodeSpec& code,
                                               const pauli::OrthonormalBasis& accessible);

/// Unit-HS-norm Gaussian random element of the encoded stabilizer
/// subalgebra; deterministic in the seed.
pauli::SkewHermitian random_stabilizer(const code::CodeSpec& code, std::uint64_t seed);

CompilationResult solve_plain(const CompilationProblem& p);
CompilationResult solve_fast(const CompilationProblem& p);
CompilationResult solve_weighted(const CompilationProblem& p);
CompilationResult solve_regularized(const CompilationProblem& p);

/// Dispatch on p.mode.
CompilationResult solve(const CompilationProblem& p);

/// Scaled-form ADMM for min_u ||P u - b||_2^2 + lambda * ||F u + f0||_1.
Eigen::VectorXd admm_lasso(const Eigen::MatrixXd& p_mat, const Eigen::VectorXd& b,
                           const Eigen::MatrixXd& f_mat, const Eigen::VectorXd& f0,
                           double lambda, const AdmmParams& params, AdmmInfo* info);

}

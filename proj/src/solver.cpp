#include "qhc/solver.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qhc/gellmann.hpp"
#include "qhc/linmap.hpp"

namespace qhc::solver {

namespace {

/// Columns vec(C K (0 + g_j) K^dag C^dag): the encoded stabilizer frame in
/// Pauli coordinates. This is the correction-to-total map, distinct from
/// build_a which stops before the encoder conjugation.
Eigen::MatrixXd encoded_stabilizer_columns(const code::CodeSpec& code, ExecPolicy policy) {
    const pauli::OrthonormalBasis stab = code::stabilizer_basis(code, policy);
    const Eigen::Index d = (Eigen::Index(1) << (2 * code.n)) - 1;
    Eigen::MatrixXd t(d, Eigen::Index(stab.size()));
    parallel_for(policy, stab.size(), [&](std::size_t j) {
        t.col(Eigen::Index(j)) = pauli::vectorize(stab.element(j));
    });
    return t;
}

/// Complement part of the naive encoding in Pauli coordinates; this is the
/// right-hand side b = -M(K(h_logical + 0)K^dag) of the least-squares system.
Eigen::VectorXd rhs_from_naive(const pauli::SkewHermitian& naive,
                               const pauli::OrthonormalBasis& accessible) {
    Eigen::VectorXd coords = pauli::vectorize(naive);
    if (accessible.empty()) {
        return coords;
    }
    const int n = pauli::qubits_for_dim(naive.dim());
    return coords - pauli::project_coords(coords, n, accessible);
}

/// Shared epilogue: reconstructs the correction and total Hamiltonians from
/// the stabilizer coordinates and evaluates the accessibility threshold.
CompilationResult finish(const CompilationProblem& p, const pauli::SkewHermitian& naive,
                         Eigen::VectorXd u, double residual) {
    const int comp = int(p.code.complement_dim());
    pauli::SkewHermitian block =
        pauli::SkewHermitian::unchecked(pauli::gellmann_assemble(comp, u));
    const pauli::SkewHermitian embedded =
        linmap::apply_a(p.code.n, p.code.k, p.code.k_map, u);
    pauli::SkewHermitian correction = pauli::SkewHermitian::unchecked(
        p.code.encoder * embedded.matrix() * p.code.encoder.adjoint());
    pauli::SkewHermitian total =
        pauli::SkewHermitian::unchecked(naive.matrix() + correction.matrix());
    CompilationResult result{
        std::move(block),
        std::move(correction),
        pauli::SkewHermitian::zero(0),
        std::move(u),
        residual,
        false,
        pauli::PauliSum(p.code.n),
        0.0,
        std::nullopt,
    };
    result.accessible = residual <= p.accessibility_tol * std::max(1.0, total.hs_norm());
    result.pauli_terms = pauli::PauliSum::from_skew(total);
    result.h_total = std::move(total);
    return result;
}

}  // namespace

double WeightMap::weight_for(std::uint64_t pauli_index) const {
    const auto it = overrides.find(pauli_index);
    return it == overrides.end() ? default_weight : it->second;
}

Eigen::VectorXd WeightMap::diagonal(int n) const {
    const std::uint64_t count = (std::uint64_t(1) << (2 * n)) - 1;
    Eigen::VectorXd diag =
        Eigen::VectorXd::Constant(Eigen::Index(count), default_weight);
    for (const auto& [index, weight] : overrides) {
        if (index == 0 || index > count) {
            throw std::invalid_argument("weights: Pauli index out of range");
        }
        diag(Eigen::Index(index) - 1) = weight;
    }
    return diag;
}

void WeightMap::validate() const {
    if (!(default_weight >= 0.0)) {
        throw std::invalid_argument("weights: default weight must be nonnegative");
    }
    for (const auto& [index, weight] : overrides) {
        if (index == 0) {
            throw std::invalid_argument("weights: identity string carries no coordinate");
        }
        if (!(weight >= 0.0)) {
            throw std::invalid_argument("weights: weight must be nonnegative");
        }
    }
}

void CompilationProblem::validate() const {
    if (h_logical.k != code.k) {
        throw std::invalid_argument("problem: logical qubit count does not match code");
    }
    if (!accessible.empty() && accessible.dim() != code.dim()) {
        throw std::invalid_argument("problem: accessible basis dimension does not match code");
    }
    if (!(lambda >= 0.0)) {
        throw std::invalid_argument("problem: lambda must be nonnegative");
    }
    if (!(svd_tol > 0.0) || !(accessibility_tol > 0.0)) {
        throw std::invalid_argument("problem: tolerances must be positive");
    }
    weights.validate();
}

double accessibility_residual(const pauli::SkewHermitian& h,
                              const pauli::OrthonormalBasis& basis) {
    if (!basis.empty() && basis.dim() != h.dim()) {
        throw std::invalid_argument("accessibility_residual: dimension mismatch");
    }
    const pauli::SkewHermitian proj = pauli::project(h, basis);
    return (h.matrix() - proj.matrix()).norm();
}

CorrectibilityResult is_correctibly_accessible(const pauli::SkewHermitian& h_encoded,
                                               const code::CodeSpec& code,
                                               const pauli::OrthonormalBasis& accessible) {
    if (h_encoded.dim() != code.dim()) {
        throw std::invalid_argument("is_correctibly_accessible: dimension mismatch");
    }
    const pauli::OrthonormalBasis stab = code::stabilizer_basis(code);
    const pauli::OrthonormalBasis joint = pauli::orthonormalize_union(accessible, stab);
    CorrectibilityResult result;
    result.residual = accessibility_residual(h_encoded, joint);
    result.accessible =
        result.residual <= 1e-8 * std::max(1.0, h_encoded.hs_norm());
    result.joint_dim = joint.size();
    return result;
}

pauli::SkewHermitian random_stabilizer(const code::CodeSpec& code, std::uint64_t seed) {
    const int comp = int(code.complement_dim());
    const Eigen::Index count = Eigen::Index(comp) * comp - 1;
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXd gamma(count);
    for (Eigen::Index i = 0; i < count; ++i) {
        gamma(i) = dist(gen);
    }
    const double norm = gamma.norm();
    if (norm > 0.0) {
        gamma /= norm;
    }
    const pauli::SkewHermitian embedded =
        linmap::apply_a(code.n, code.k, code.k_map, gamma);
    return pauli::SkewHermitian::unchecked(code.encoder * embedded.matrix() *
                                           code.encoder.adjoint());
}

CompilationResult solve_plain(const CompilationProblem& p) {
    p.validate();
    const double start = now_seconds();
    const pauli::SkewHermitian naive = code::naive_encoding(p.code, p.h_logical);
    const Eigen::MatrixXd ma = linmap::build_ma(p.code, p.accessible, p.policy);
    const Eigen::VectorXd b = rhs_from_naive(naive, p.accessible);
    const Eigen::VectorXd u = linmap::pinv(ma, p.svd_tol) * b;
    CompilationResult result = finish(p, naive, u, 0.0);
    result.residual = accessibility_residual(result.h_total, p.accessible);
    result.accessible =
        result.residual <= p.accessibility_tol * std::max(1.0, result.h_total.hs_norm());
    result.solve_seconds = now_seconds() - start;
    return result;
}

CompilationResult solve_fast(const CompilationProblem& p) {
    p.validate();
    const double start = now_seconds();
    const pauli::SkewHermitian naive = code::naive_encoding(p.code, p.h_logical);
    const int comp = int(p.code.complement_dim());
    const Eigen::Index pdim = Eigen::Index(comp) * comp - 1;
    const Eigen::Index m = Eigen::Index(p.accessible.size());
    Eigen::VectorXd u = Eigen::VectorXd::Zero(pdim);
    if (m > 0) {
        // Overlap of each accessible element with the encoded stabilizer
        // frame, computed blockwise: row i is the Gell-Mann coordinate vector
        // of the complement block of K^dag (C^dag w_i C) K.
        Eigen::MatrixXd overlap(m, pdim);
        Eigen::VectorXd alpha(m);
        parallel_for(p.policy, std::size_t(m), [&](std::size_t i) {
            const Eigen::MatrixXcd conj = p.code.encoder.adjoint() *
                                          p.accessible.element(i).matrix() *
                                          p.code.encoder;
            const Eigen::MatrixXcd block = code::extract_stabilizer_block(
                conj, p.code.n, p.code.k, p.code.k_map);
            overlap.row(Eigen::Index(i)) = pauli::gellmann_coords(block).transpose();
            alpha(Eigen::Index(i)) = pauli::hs_inner(p.accessible.element(i), naive);
        });
        // Normal equations (I - S^T S) u = S^T alpha through the SVD of S.
        // Singular values with 1 - sigma^2 at rounding scale mark directions
        // where the composed map vanishes; the minimum-norm solution drops
        // them rather than dividing by noise.
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(overlap,
                                              Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd& sigma = svd.singularValues();
        Eigen::VectorXd gain = Eigen::VectorXd::Zero(sigma.size());
        for (Eigen::Index i = 0; i < sigma.size(); ++i) {
            const double lam = 1.0 - sigma(i) * sigma(i);
            if (lam > 1e-12) {
                gain(i) = sigma(i) / lam;
            }
        }
        u = svd.matrixV() * gain.asDiagonal() *
            (svd.matrixU().transpose() * alpha);
    }
    CompilationResult result = finish(p, naive, u, 0.0);
    result.residual = accessibility_residual(result.h_total, p.accessible);
    result.accessible =
        result.residual <= p.accessibility_tol * std::max(1.0, result.h_total.hs_norm());
    result.solve_seconds = now_seconds() - start;
    return result;
}

CompilationResult solve_weighted(const CompilationProblem& p) {
    p.validate();
    const double start = now_seconds();
    const pauli::SkewHermitian naive = code::naive_encoding(p.code, p.h_logical);
    const Eigen::VectorXd jdiag = p.weights.diagonal(p.code.n);
    const Eigen::MatrixXd t = encoded_stabilizer_columns(p.code, p.policy);
    const Eigen::VectorXd t0 = pauli::vectorize(naive);
    const Eigen::MatrixXd weighted = jdiag.asDiagonal() * t;
    const Eigen::VectorXd rhs = -jdiag.cwiseProduct(t0);
    const Eigen::VectorXd u = linmap::pinv(weighted, p.svd_tol) * rhs;
    CompilationResult result = finish(p, naive, u, 0.0);
    result.residual =
        jdiag.cwiseProduct(pauli::vectorize(result.h_total)).norm();
    result.accessible =
        result.residual <= p.accessibility_tol * std::max(1.0, result.h_total.hs_norm());
    result.solve_seconds = now_seconds() - start;
    return result;
}

CompilationResult solve_regularized(const CompilationProblem& p) {
    p.validate();
    const double start = now_seconds();
    const pauli::SkewHermitian naive = code::naive_encoding(p.code, p.h_logical);
    const Eigen::MatrixXd ma = linmap::build_ma(p.code, p.accessible, p.policy);
    const Eigen::VectorXd b = rhs_from_naive(naive, p.accessible);
    const Eigen::MatrixXd f = encoded_stabilizer_columns(p.code, p.policy);
    const Eigen::VectorXd f0 = pauli::vectorize(naive);
    // The penalty is lambda times the l1 norm of the raw Pauli coefficients;
    // coordinates in the normalized frame carry an extra 2^{n/2}.
    const double lambda_eff =
        p.lambda / std::sqrt(double(Eigen::Index(1) << p.code.n));
    AdmmInfo info;
    const Eigen::VectorXd u =
        admm_lasso(ma, b, f, f0, lambda_eff, AdmmParams{}, &info);
    CompilationResult result = finish(p, naive, u, 0.0);
    result.residual = accessibility_residual(result.h_total, p.accessible);
    result.accessible =
        result.residual <= p.accessibility_tol * std::max(1.0, result.h_total.hs_norm());
    result.admm = info;
    result.solve_seconds = now_seconds() - start;
    return result;
}

CompilationResult solve(const CompilationProblem& p) {
    switch (p.mode) {
        case SolveMode::plain:
            return solve_plain(p);
        case SolveMode::fast:
            return solve_fast(p);
        case SolveMode::weighted:
            return solve_weighted(p);
        case SolveMode::regularized:
            return solve_regularized(p);
    }
    throw std::invalid_argument("solve: unknown mode");
}

}

#include "qhc/verify.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qhc::verify {

namespace {

double spectral_norm(const Eigen::MatrixXcd& m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

}  // namespace

Eigen::MatrixXcd expm_skew(const pauli::SkewHermitian& h) {
    const Eigen::Index dim = h.dim();
    // h = i * herm with herm Hermitian, so exp(h) = V exp(i diag(w)) V^dag.
    const Eigen::MatrixXcd herm =
        std::complex<double>(0.0, -1.0) * h.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("expm_skew: eigendecomposition failed");
    }
    Eigen::VectorXcd phases(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        phases(j) = std::exp(std::complex<double>(0.0, eig.eigenvalues()(j)));
    }
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

double codespace_action_error(const code::CodeSpec& code, const pauli::SkewHermitian& h_total,
                              const code::LogicalHamiltonian& h_logical) {
    if (h_total.dim() != code.dim()) {
        throw std::invalid_argument("codespace_action_error: operator dimension mismatch");
    }
    if (h_logical.k != code.k) {
        throw std::invalid_argument("codespace_action_error: logical qubit count mismatch");
    }
    const Eigen::MatrixXcd u_total = expm_skew(h_total);
    const Eigen::MatrixXcd u_logical = expm_skew(h_logical.op);
    const Eigen::Index logical = Eigen::Index(1) << code.k;
    double worst = 0.0;
    for (Eigen::Index psi = 0; psi < logical; ++psi) {
        const Eigen::VectorXcd lhs =
            u_total * code.encoder.col(code.k_map[psi]);
        Eigen::VectorXcd embedded = Eigen::VectorXcd::Zero(code.dim());
        for (Eigen::Index a = 0; a < logical; ++a) {
            embedded(code.k_map[a]) = u_logical(a, psi);
        }
        const Eigen::VectorXcd rhs = code.encoder * embedded;
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

double phase_free_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v) {
    if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
        throw std::invalid_argument("phase_free_distance: dimension mismatch");
    }
    const std::complex<double> overlap =
        u.conjugate().cwiseProduct(v).sum();
    return 1.0 - std::abs(overlap) / double(u.rows());
}

VerificationReport unitary_error_bound(const pauli::SkewHermitian& h,
                                       const pauli::SkewHermitian& v) {
    if (h.dim() != v.dim()) {
        throw std::invalid_argument("unitary_error_bound: dimension mismatch");
    }
    const Eigen::MatrixXcd eu = expm_skew(h);
    const Eigen::MatrixXcd ev = expm_skew(v);
    VerificationReport report;
    report.unitary_distance = spectral_norm(eu - ev);
    const double diff_norm = spectral_norm(h.matrix() - v.matrix());
    const double h_norm = spectral_norm(h.matrix());
    report.bound_value = diff_norm * std::exp(h_norm);
    report.bound_satisfied = report.unitary_distance <= report.bound_value + 1e-9;
    report.norm_ordering_ok = spectral_norm(v.matrix()) <= h_norm + 1e-12;
    report.phase_free_distance = phase_free_distance(eu, ev);
    return report;
}

VerificationReport verify_result(const code::CodeSpec& code,
                                 const pauli::SkewHermitian& h_total,
                                 const code::LogicalHamiltonian& h_logical,
                                 const pauli::OrthonormalBasis& accessible) {
    const pauli::SkewHermitian projection = pauli::project(h_total, accessible);
    VerificationReport report = unitary_error_bound(h_total, projection);
    report.codespace_error = codespace_action_error(code, h_total, h_logical);
    return report;
}

}

#pragma once

#include <Eigen/Dense>

#include "qhc/basis.hpp"
#include "qhc/code.hpp"
#include "qhc/skew.hpp"

namespace qhc::verify {

struct VerificationReport {
    /// Max deviation of exp(h_total) from the target logical action over the
    /// encoded computational basis states.
    double codespace_error = 0.0;
    /// Global-phase-insensitive distance 1 - |tr(U^dag V)|/dim between
    /// exp(h) and exp(projection).
    double phase_free_distance = 0.0;
    /// Spectral-norm distance ||exp(h) - exp(v)||.
    double unitary_distance = 0.0;
    /// Right-hand side ||h - v|| * exp(||h||) in spectral norm.
    double bound_value = 0.0;
    bool bound_satisfied = false;
    /// Whether ||v|| <= ||h|| held; expected when v projects h.
    bool norm_ordering_ok = false;
};

/// exp(h) by eigendecomposition; exact for the normal inputs used here.
Eigen::MatrixXcd expm_skew(const pauli::SkewHermitian& h);

/// Max over encoded computational basis states psi of
/// ||exp(h_total) C K(psi + 0) - C K((exp(h_logical) psi) + 0)||_2.
double codespace_action_error(const code::CodeSpec& code, const pauli::SkewHermitian& h_total,
                              const code::LogicalHamiltonian& h_logical);

/// 1 - |tr(u^dag v)| / dim, zero exactly when u and v agree up to global phase.
double phase_free_distance(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

/// Checks ||exp(h) - exp(v)|| <= ||h - v|| exp(||h||) in spectral norm;
/// fills the unitary-distance and bound fields of the report.
VerificationReport unitary_error_bound(const pauli::SkewHermitian& h,
                                       const pauli::SkewHermitian& v);

/// Full verification block for a compile result: codespace action against
/// the logical target plus the error bound of h_total against its
/// accessible projection.
VerificationReport verify_result(const code::CodeSpec& code,
                                 const pauli::SkewHermitian& h_total,
                                 const code::LogicalHamiltonian& h_logical,
                                 const pauli::OrthonormalBasis& accessible);

}

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace qhc::pauli {

/// Orthonormal generalized Gell-Mann frame for su(d), d >= 2, as
/// skew-Hermitian matrices. Used where d is not a power of two and the
/// Pauli frame is unavailable.
///
/// Ordering: for each pair j < k (lexicographic), the symmetric element
/// i(E_jk + E_kj)/sqrt(2) followed by the antisymmetric (E_jk - E_kj)/sqrt(2);
/// then the diagonal elements i diag(1,..,1,-l,0,..)/sqrt(l(l+1)) for
/// l = 1..d-1. Total d^2 - 1 elements.
std::vector<Eigen::MatrixXcd> gellmann_basis(int d);

/// Coordinates of a traceless skew-Hermitian m in the frame above, O(d^2).
Eigen::VectorXd gellmann_coords(const Eigen::MatrixXcd& m);

/// Inverse of gellmann_coords: sum_j coords[j] * frame[j].
Eigen::MatrixXcd gellmann_assemble(int d, const Eigen::VectorXd& coords);

}

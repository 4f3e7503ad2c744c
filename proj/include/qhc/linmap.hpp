#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qhc/basis.hpp"
#include "qhc/code.hpp"
#include "qhc/kernels.hpp"
#include "qhc/skew.hpp"

namespace qhc::linmap {

/// Matrix of the inaccessibility map M(v) = proj_accessible(C v C^dag) - C v C^dag
/// in Pauli coordinates, size (4^n - 1) square. Vanishes exactly on operators
/// whose encoded image lies in the accessible span.
Eigen::MatrixXd build_m(const code::CodeSpec& code,
                        const pauli::OrthonormalBasis& accessible,
                        ExecPolicy policy = ExecPolicy::serial);

/// M applied to one operator without forming the matrix.
pauli::SkewHermitian apply_m(const pauli::SkewHermitian& v, const code::CodeSpec& code,
                             const pauli::OrthonormalBasis& accessible);

/// Matrix of the stabilizer embedding A(u) = K (0 + assemble(u)) K^dag in Pauli
/// coordinates, size (4^n - 1) x ((2^n - 2^k)^2 - 1), where assemble builds the
/// su(2^n - 2^k) element with Gell-Mann coordinates u. Columns are orthonormal
/// and orthogonal to every embedded-logical direction.
Eigen::MatrixXd build_a(int n, int k, const std::vector<std::uint32_t>& k_map,
                        ExecPolicy policy = ExecPolicy::serial);

/// A applied to stabilizer coordinates.
pauli::SkewHermitian apply_a(int n, int k, const std::vector<std::uint32_t>& k_map,
                             const Eigen::VectorXd& u);

/// Fused composition: column j is vec(M(A(frame_j))). Equal to
/// build_m * build_a but assembled without the dense square factor.
Eigen::MatrixXd build_ma(const code::CodeSpec& code,
                         const pauli::OrthonormalBasis& accessible,
                         ExecPolicy policy = ExecPolicy::serial);

/// Moore-Penrose pseudoinverse through SVD; singular values at or below
/// rel_tol * sigma_max are treated as zero.
Eigen::MatrixXd pinv(const Eigen::MatrixXd& m, double rel_tol = 1e-10);

}

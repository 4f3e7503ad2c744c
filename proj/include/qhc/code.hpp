#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qhc/basis.hpp"
#include "qhc/kernels.hpp"
#include "qhc/pauli.hpp"
#include "qhc/skew.hpp"

namespace qhc::code {

/// An [[n, k, d]] code: the encoding unitary C and the index permutation
/// realizing the K map from direct-sum to tensor-product coordinates.
/// The distance d is metadata only.
struct CodeSpec {
    int n = 0;
    int k = 0;
    int d = 0;
    Eigen::MatrixXcd encoder;
    std::vector<std::uint32_t> k_map;

    /// Validates unitarity (1e-10) and unit determinant (1e-8), and builds
    /// the K permutation.
    static CodeSpec make(int n, int k, int d, Eigen::MatrixXcd encoder);

    Eigen::Index dim() const { return Eigen::Index(1) << n; }
    /// Dimension 2^n - 2^k of the complement block.
    Eigen::Index complement_dim() const { return (Eigen::Index(1) << n) - (Eigen::Index(1) << k); }
};

/// A logical Hamiltonian on k qubits.
struct LogicalHamiltonian {
    int k = 0;
    pauli::SkewHermitian op;

    static LogicalHamiltonian make(int k, pauli::SkewHermitian op);
};

/// The K permutation on 2^n basis indices: logical index psi in [0, 2^k)
/// maps to tensor index psi * 2^{n-k}, and complement index 2^k + m maps to
/// i_m * 2^{n-k} + j_m with i_m = floor(m / (2^{n-k} - 1)) and
/// j_m = (m mod (2^{n-k} - 1)) + 1.
std::vector<std::uint32_t> build_k(int n, int k);

/// K (h + 0_{2^n - 2^k}) K^dag: the logical block carried into tensor
/// coordinates without the encoder conjugation.
pauli::SkewHermitian embed_logical(const LogicalHamiltonian& h, int n,
                                   const std::vector<std::uint32_t>& k_map);

/// K (0_{2^k} + v) K^dag for a traceless skew-Hermitian v on the complement.
pauli::SkewHermitian embed_stabilizer(const Eigen::MatrixXcd& v, int n, int k,
                                      const std::vector<std::uint32_t>& k_map);

/// Reads the lower (complement) block of K^dag y K; left inverse of
/// embed_stabilizer on its image.
Eigen::MatrixXcd extract_stabilizer_block(const Eigen::MatrixXcd& y, int n, int k,
                                          const std::vector<std::uint32_t>& k_map);

/// C K (h + 0) K^dag C^dag, the canonical encoded form of h.
pauli::SkewHermitian naive_encoding(const CodeSpec& code, const LogicalHamiltonian& h);

/// Orthonormal basis of the stabilizer subalgebra C K (0 + su(2^n - 2^k)) K^dag C^dag,
/// dimension (2^n - 2^k)^2 - 1.
pauli::OrthonormalBasis stabilizer_basis(const CodeSpec& code,
                                         ExecPolicy policy = ExecPolicy::serial);

/// Orthonormal basis of the logical subalgebra C K (su(2^k) + 0) K^dag C^dag,
/// dimension 4^k - 1.
pauli::OrthonormalBasis logical_basis(const CodeSpec& code);

/// Principal traceless logarithm: log(U / det(U)^{1/dim}) via the
/// eigenstructure of the normal input, eigenvalue phases in (-pi, pi] with
/// -pi mapped to +pi. exp of the result reproduces U up to global phase.
pauli::SkewHermitian traceless_log(const Eigen::MatrixXcd& u, double unitary_tol = 1e-10);

/// Registry of shipped codes; currently "[[4,2,2]]".
CodeSpec builtin_code(const std::string& name);

/// Per-row result of checking the encoder against expected conjugation
/// images: C B_r C^dag = sign * expected, where B_r runs over
/// X_0..X_{n-1}, Z_0..Z_{n-1}.
struct EncoderRowCheck {
    int row = 0;
    bool pass = false;
    int sign = 0;  // +1 or -1 when pass
    std::string expected;
    std::string observed;
};

std::vector<EncoderRowCheck> validate_encoder(const CodeSpec& code,
                                              const std::vector<pauli::PauliString>& f_rows,
                                              double tol = 1e-9);

}

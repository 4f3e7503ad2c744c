#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qhc::pauli {

/// An n-qubit Pauli operator in binary symplectic form with a tracked sign.
///
/// The dense realization is i^q * tensor_i i^{x_i z_i} X^{x_i} Z^{z_i},
/// where q is the quarter-phase sign exponent and x_i, z_i are the bits of
/// the X and Z masks for qubit i. Qubit 0 is the leftmost character of a
/// text label and occupies the most significant mask bit. With this phase
/// convention the sign-free (q = 0) strings are Hermitian, products of
/// strings are again strings, and any two strings either commute or
/// anticommute.
class PauliString {
public:
    /// Identity string on n qubits.
    explicit PauliString(int n);

    PauliString(int n, std::uint64_t x_bits, std::uint64_t z_bits, int sign_exponent = 0);

    /// Parses labels like "XIZY", optionally prefixed by one of +, -, +i, -i.
    static PauliString from_label(std::string_view label);

    int n() const { return n_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }

    /// Exponent q of the sign i^q, in {0, 1, 2, 3}.
    int sign_exponent() const { return q_; }
    std::complex<double> sign() const;

    bool is_identity() const { return x_ == 0 && z_ == 0; }

    /// Number of qubits acted on non-trivially.
    int weight() const;

    /// Sign-free ordering key (x_bits << n) | z_bits; 0 is the identity.
    std::uint64_t index() const { return (x_ << n_) | z_; }

    std::string label() const;

    /// Exact operator product, with the quarter-phase accumulated.
    PauliString operator*(const PauliString& other) const;

    bool commutes_with(const PauliString& other) const;

    bool operator==(const PauliString& other) const = default;

    /// Same (x, z) masks, ignoring the sign.
    bool same_string(const PauliString& other) const;

    /// Returns (phase, flipped index) such that P|idx> = phase |flipped>.
    std::pair<std::complex<double>, std::uint64_t> apply_to_basis_state(std::uint64_t idx) const;

    Eigen::MatrixXcd to_dense() const;

private:
    int n_;
    std::uint64_t x_;
    std::uint64_t z_;
    int q_;
};

/// All 4^n - 1 non-identity strings on n qubits in index order.
std::vector<PauliString> all_strings(int n);

}

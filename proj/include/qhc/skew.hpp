#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qhc/pauli.hpp"

namespace qhc::pauli {

/// A traceless skew-Hermitian operator, stored dense.
///
/// These are the elements of su(2^n). Construction validates skewness and
/// tracelessness; the checked constructor is the default and the unchecked
/// path is reserved for values that are skew-Hermitian by construction.
class SkewHermitian {
public:
    explicit SkewHermitian(Eigen::MatrixXcd m, double tol = 1e-12);

    static SkewHermitian zero(Eigen::Index dim);

    /// Skips validation; for internal results that are exact by construction.
    static SkewHermitian unchecked(Eigen::MatrixXcd m);

    Eigen::Index dim() const { return mat_.rows(); }
    const Eigen::MatrixXcd& matrix() const { return mat_; }

    double hs_norm() const;

private:
    SkewHermitian() = default;
    Eigen::MatrixXcd mat_;
};

/// Matrix commutator ab - ba; traceless and skew-Hermitian again.
SkewHermitian bracket(const SkewHermitian& a, const SkewHermitian& b);

/// Hilbert-Schmidt inner product Re tr(a^dag b).
double hs_inner(const SkewHermitian& a, const SkewHermitian& b);

/// Coordinates of a in the orthonormal frame {i P / 2^{n/2}}, length 4^n - 1,
/// ordered by PauliString::index. Requires dim(a) = 2^n.
Eigen::VectorXd vectorize(const SkewHermitian& a);

SkewHermitian unvectorize(int n, const Eigen::VectorXd& coords);

/// Number of qubits for a dense dimension, throwing unless dim = 2^n.
int qubits_for_dim(Eigen::Index dim);

/// Sparse representation of an su(2^n) element as sum_P c_P * (i P) with
/// real coefficients over sign-free Pauli strings.
class PauliSum {
public:
    explicit PauliSum(int n);

    int n() const { return n_; }

    /// Adds coeff * (i p). The string's tracked sign is folded into the
    /// coefficient; imaginary signs are rejected since they would break
    /// skew-Hermiticity.
    void add(const PauliString& p, double coeff);

    /// Terms with |coefficient| > cutoff, in index order.
    std::vector<std::pair<PauliString, double>> terms(double cutoff = 0.0) const;

    std::size_t term_count(double cutoff = 0.0) const;

    double coefficient(const PauliString& p) const;

    /// Sum of |c_P| over all terms.
    double l1_norm() const;

    SkewHermitian to_skew() const;

    static PauliSum from_skew(const SkewHermitian& a);

private:
    int n_;
    std::map<std::uint64_t, double> coeffs_;
};

}

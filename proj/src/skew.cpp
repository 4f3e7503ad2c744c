#include "qhc/skew.hpp"

#include <cmath>
#include <stdexcept>

namespace qhc::pauli {

SkewHermitian::SkewHermitian(Eigen::MatrixXcd m, double tol) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) {
        throw std::invalid_argument("SkewHermitian: matrix must be square");
    }
    const double scale = std::max(1.0, mat_.norm());
    if ((mat_ + mat_.adjoint()).norm() > tol * scale) {
        throw std::invalid_argument("SkewHermitian: matrix is not skew-Hermitian");
    }
    if (std::abs(mat_.trace()) > tol * scale) {
        throw std::invalid_argument("SkewHermitian: matrix is not traceless");
    }
}

SkewHermitian SkewHermitian::zero(Eigen::Index dim) {
    return unchecked(Eigen::MatrixXcd::Zero(dim, dim));
}

SkewHermitian SkewHermitian::unchecked(Eigen::MatrixXcd m) {
    SkewHermitian out;
    out.mat_ = std::move(m);
    return out;
}

double SkewHermitian::hs_norm() const { return mat_.norm(); }

SkewHermitian bracket(const SkewHermitian& a, const SkewHermitian& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("bracket: dimension mismatch");
    }
    return SkewHermitian::unchecked(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

double hs_inner(const SkewHermitian& a, const SkewHermitian& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("hs_inner: dimension mismatch");
    }
    // tr(a^dag b) summed elementwise, avoiding the full matrix product.
    return a.matrix().conjugate().cwiseProduct(b.matrix()).sum().real();
}

int qubits_for_dim(Eigen::Index dim) {
    int n = 0;
    Eigen::Index d = 1;
    while (d < dim) {
        d <<= 1;
        ++n;
    }
    if (d != dim || n < 1) {
        throw std::invalid_argument("expected a dimension 2^n with n >= 1, got " +
                                    std::to_string(dim));
    }
    return n;
}

Eigen::VectorXd vectorize(const SkewHermitian& a) {
    const int n = qubits_for_dim(a.dim());
    const std::uint64_t dim = 1ull << n;
    const double norm = std::pow(2.0, n / 2.0);
    const Eigen::MatrixXcd& m = a.matrix();
    Eigen::VectorXd out(static_cast<Eigen::Index>((dim * dim) - 1));
    // c_P = <i P / 2^{n/2}, a> = Re(-i tr(P a)) / 2^{n/2}, with the trace
    // taken over the single non-zero entry per row of P.
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t z = 0; z < dim; ++z) {
            if (x == 0 && z == 0) continue;
            const PauliString p(n, x, z, 0);
            std::complex<double> tr = 0;
            for (std::uint64_t c = 0; c < dim; ++c) {
                auto [phase, row] = p.apply_to_basis_state(c);
                tr += phase * m(c, row);
            }
            const std::complex<double> val = std::complex<double>(0, -1) * tr;
            out(static_cast<Eigen::Index>(((x << n) | z) - 1)) = val.real() / norm;
        }
    }
    return out;
}

SkewHermitian unvectorize(int n, const Eigen::VectorXd& coords) {
    const std::uint64_t dim = 1ull << n;
    const Eigen::Index expected = static_cast<Eigen::Index>((dim * dim) - 1);
    if (coords.size() != expected) {
        throw std::invalid_argument("unvectorize: expected " + std::to_string(expected) +
                                    " coordinates, got " + std::to_string(coords.size()));
    }
    const double norm = std::pow(2.0, n / 2.0);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index idx = 0; idx < expected; ++idx) {
        const double c = coords(idx);
        if (c == 0.0) continue;
        const std::uint64_t key = static_cast<std::uint64_t>(idx) + 1;
        const std::uint64_t x = key >> n;
        const std::uint64_t z = key & (dim - 1);
        const PauliString p(n, x, z, 0);
        const std::complex<double> scale = std::complex<double>(0, 1) * (c / norm);
        for (std::uint64_t col = 0; col < dim; ++col) {
            auto [phase, row] = p.apply_to_basis_state(col);
            m(row, col) += scale * phase;
        }
    }
    return SkewHermitian::unchecked(std::move(m));
}

PauliSum::PauliSum(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("PauliSum: qubit count must be positive");
    }
}

void PauliSum::add(const PauliString& p, double coeff) {
    if (p.n() != n_) {
        throw std::invalid_argument("PauliSum: string qubit count mismatch");
    }
    double folded = coeff;
    switch (p.sign_exponent()) {
        case 0: break;
        case 2: folded = -coeff; break;
        default:
            throw std::invalid_argument(
                "PauliSum: imaginary-signed term would not be skew-Hermitian");
    }
    if (p.is_identity()) {
        throw std::invalid_argument("PauliSum: identity term would not be traceless");
    }
    coeffs_[p.index()] += folded;
}

std::vector<std::pair<PauliString, double>> PauliSum::terms(double cutoff) const {
    std::vector<std::pair<PauliString, double>> out;
    const std::uint64_t dim = 1ull << n_;
    for (const auto& [key, c] : coeffs_) {
        if (std::abs(c) <= cutoff) continue;
        out.emplace_back(PauliString(n_, key >> n_, key & (dim - 1), 0), c);
    }
    return out;
}

std::size_t PauliSum::term_count(double cutoff) const {
    std::size_t count = 0;
    for (const auto& [key, c] : coeffs_) {
        (void)key;
        if (std::abs(c) > cutoff) ++count;
    }
    return count;
}

double PauliSum::coefficient(const PauliString& p) const {
    if (p.sign_exponent() % 2 != 0) {
        throw std::invalid_argument("PauliSum: imaginary-signed term has no real coefficient");
    }
    const auto it = coeffs_.find(p.index());
    if (it == coeffs_.end()) return 0.0;
    return p.sign_exponent() == 2 ? -it->second : it->second;
}

double PauliSum::l1_norm() const {
    double out = 0;
    for (const auto& [key, c] : coeffs_) {
        (void)key;
        out += std::abs(c);
    }
    return out;
}

SkewHermitian PauliSum::to_skew() const {
    const std::uint64_t dim = 1ull << n_;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [key, c] : coeffs_) {
        if (c == 0.0) continue;
        const PauliString p(n_, key >> n_, key & (dim - 1), 0);
        const std::complex<double> scale = std::complex<double>(0, 1) * c;
        for (std::uint64_t col = 0; col < dim; ++col) {
            auto [phase, row] = p.apply_to_basis_state(col);
            m(row, col) += scale * phase;
        }
    }
    return SkewHermitian::unchecked(std::move(m));
}

PauliSum PauliSum::from_skew(const SkewHermitian& a) {
    const int n = qubits_for_dim(a.dim());
    PauliSum out(n);
    const Eigen::VectorXd coords = vectorize(a);
    const double norm = std::pow(2.0, n / 2.0);
    const std::uint64_t dim = 1ull << n;
    for (Eigen::Index idx = 0; idx < coords.size(); ++idx) {
        if (coords(idx) == 0.0) continue;
        const std::uint64_t key = static_cast<std::uint64_t>(idx) + 1;
        // vectorize coordinates are against i P / 2^{n/2}; PauliSum stores
        // coefficients against i P.
        out.add(PauliString(n, key >> n, key & (dim - 1), 0), coords(idx) / norm);
    }
    return out;
}

}

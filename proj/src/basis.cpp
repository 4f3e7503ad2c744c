#include "qhc/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qhc::pauli {

OrthonormalBasis OrthonormalBasis::from_pauli_strings(int n,
                                                      const std::vector<PauliString>& strings) {
    OrthonormalBasis out;
    out.tag_ = FrameTag::pauli_frame;
    out.dim_ = Eigen::Index(1) << n;
    const double norm = std::pow(2.0, n / 2.0);
    for (const PauliString& p : strings) {
        if (p.n() != n) {
            throw std::invalid_argument("OrthonormalBasis: string qubit count mismatch");
        }
        if (p.is_identity()) {
            throw std::invalid_argument("OrthonormalBasis: identity string is not traceless");
        }
        if (!out.string_indices_.insert(p.index()).second) {
            throw std::invalid_argument("OrthonormalBasis: duplicate Pauli string " + p.label());
        }
        const PauliString bare(n, p.x_bits(), p.z_bits(), 0);
        out.strings_.push_back(bare);
        out.elements_.push_back(SkewHermitian::unchecked(
            (std::complex<double>(0, 1) / norm) * bare.to_dense()));
    }
    return out;
}

OrthonormalBasis OrthonormalBasis::from_dense(std::vector<SkewHermitian> elements, bool validate,
                                              double ortho_tol) {
    OrthonormalBasis out;
    out.tag_ = FrameTag::dense_frame;
    if (!elements.empty()) {
        out.dim_ = elements.front().dim();
        for (const SkewHermitian& e : elements) {
            if (e.dim() != out.dim_) {
                throw std::invalid_argument("OrthonormalBasis: mixed dimensions");
            }
        }
        if (validate) {
            for (std::size_t i = 0; i < elements.size(); ++i) {
                for (std::size_t j = i; j < elements.size(); ++j) {
                    const double g = hs_inner(elements[i], elements[j]);
                    const double expected = (i == j) ? 1.0 : 0.0;
                    if (std::abs(g - expected) > ortho_tol) {
                        throw std::invalid_argument(
                            "OrthonormalBasis: elements are not orthonormal (Gram deviation " +
                            std::to_string(std::abs(g - expected)) + ")");
                    }
                }
            }
        }
    }
    out.elements_ = std::move(elements);
    return out;
}

const std::vector<PauliString>& OrthonormalBasis::strings() const {
    if (tag_ != FrameTag::pauli_frame) {
        throw std::logic_error("OrthonormalBasis: dense-frame basis has no string list");
    }
    return strings_;
}

bool OrthonormalBasis::contains_index(std::uint64_t pauli_index) const {
    return string_indices_.count(pauli_index) > 0;
}

Eigen::VectorXd OrthonormalBasis::coefficients(const SkewHermitian& a) const {
    if (!elements_.empty() && a.dim() != dim_) {
        throw std::invalid_argument("OrthonormalBasis: dimension mismatch in coefficients");
    }
    Eigen::VectorXd out(static_cast<Eigen::Index>(elements_.size()));
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = hs_inner(elements_[i], a);
    }
    return out;
}

SkewHermitian project(const SkewHermitian& a, const OrthonormalBasis& basis) {
    if (basis.empty()) {
        return SkewHermitian::zero(a.dim());
    }
    if (a.dim() != basis.dim()) {
        throw std::invalid_argument("project: dimension mismatch");
    }
    if (basis.frame_tag() == FrameTag::pauli_frame) {
        const int n = qubits_for_dim(a.dim());
        return unvectorize(n, project_coords(vectorize(a), n, basis));
    }
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(a.dim(), a.dim());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        acc += hs_inner(basis.element(i), a) * basis.element(i).matrix();
    }
    return SkewHermitian::unchecked(std::move(acc));
}

Eigen::VectorXd project_coords(const Eigen::VectorXd& coords, int n,
                               const OrthonormalBasis& basis) {
    if (basis.frame_tag() == FrameTag::pauli_frame) {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(coords.size());
        for (const PauliString& p : basis.strings()) {
            const Eigen::Index idx = static_cast<Eigen::Index>(p.index()) - 1;
            out(idx) = coords(idx);
        }
        return out;
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(coords.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Eigen::VectorXd v = vectorize(basis.element(i));
        out += v.dot(coords) * v;
    }
    return out;
}

OrthonormalBasis orthonormalize_union(const OrthonormalBasis& a, const OrthonormalBasis& b,
                                      double tol) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("orthonormalize_union: dimension mismatch");
    }
    if (a.frame_tag() == FrameTag::pauli_frame && b.frame_tag() == FrameTag::pauli_frame) {
        std::vector<PauliString> merged = a.strings();
        for (const PauliString& p : b.strings()) {
            if (!a.contains_index(p.index())) merged.push_back(p);
        }
        std::sort(merged.begin(), merged.end(),
                  [](const PauliString& l, const PauliString& r) { return l.index() < r.index(); });
        return OrthonormalBasis::from_pauli_strings(qubits_for_dim(a.dim()), merged);
    }
    std::vector<SkewHermitian> kept = a.elements();
    for (const SkewHermitian& cand : b.elements()) {
        Eigen::MatrixXcd residual = cand.matrix();
        // Two modified Gram-Schmidt sweeps keep the result orthonormal well
        // below the tolerances used downstream.
        for (int sweep = 0; sweep < 2; ++sweep) {
            for (const SkewHermitian& k : kept) {
                const std::complex<double> c =
                    k.matrix().conjugate().cwiseProduct(residual).sum();
                residual -= c.real() * k.matrix();
            }
        }
        const double norm = residual.norm();
        if (norm > tol) {
            kept.push_back(SkewHermitian::unchecked(residual / norm));
        }
    }
    return OrthonormalBasis::from_dense(std::move(kept), false);
}

}

#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

#include "qhc/pauli.hpp"
#include "qhc/skew.hpp"

namespace qhc::pauli {

enum class FrameTag { pauli_frame, dense_frame };

/// An HS-orthonormal ordered list of traceless skew-Hermitian operators
/// spanning a subspace of su(2^n).
///
/// Pauli-frame bases hold elements of the form i P / 2^{n/2} and remember
/// the underlying strings, enabling coordinate-mask projections. Dense-frame
/// bases are arbitrary orthonormal lists.
class OrthonormalBasis {
public:
    /// Elements i P / 2^{n/2} for the given sign-free strings; duplicates
    /// (by mask) are rejected. Orthonormality is automatic.
    static OrthonormalBasis from_pauli_strings(int n, const std::vector<PauliString>& strings);

    /// Validates pairwise orthonormality within ortho_tol unless the caller
    /// vouches for it (validate = false for conjugates of orthonormal sets).
    static OrthonormalBasis from_dense(std::vector<SkewHermitian> elements,
                                       bool validate = true, double ortho_tol = 1e-10);

    std::size_t size() const { return elements_.size(); }
    Eigen::Index dim() const { return dim_; }
    FrameTag frame_tag() const { return tag_; }
    bool empty() const { return elements_.empty(); }

    const SkewHermitian& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<SkewHermitian>& elements() const { return elements_; }

    /// The underlying strings; throws for dense-frame bases.
    const std::vector<PauliString>& strings() const;

    /// Pauli-frame membership of a string index; false for dense frames.
    bool contains_index(std::uint64_t pauli_index) const;

    /// hs_inner(element_i, a) for each element.
    Eigen::VectorXd coefficients(const SkewHermitian& a) const;

private:
    OrthonormalBasis() = default;
    std::vector<SkewHermitian> elements_;
    std::vector<PauliString> strings_;
    std::unordered_set<std::uint64_t> string_indices_;
    FrameTag tag_ = FrameTag::dense_frame;
    Eigen::Index dim_ = 0;
};

/// Orthogonal projection of a onto span(basis).
SkewHermitian project(const SkewHermitian& a, const OrthonormalBasis& basis);

/// Projection acting on Pauli-coordinate vectors (length 4^n - 1).
Eigen::VectorXd project_coords(const Eigen::VectorXd& coords, int n,
                               const OrthonormalBasis& basis);

/// Orthonormal basis for the union of the two spans. For two Pauli-frame
/// inputs this is a string-set union; otherwise Gram-Schmidt over the
/// concatenation with the given new-direction threshold.
OrthonormalBasis orthonormalize_union(const OrthonormalBasis& a, const OrthonormalBasis& b,
                                      double tol = 1e-9);

}

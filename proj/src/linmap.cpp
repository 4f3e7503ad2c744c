#include "qhc/linmap.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "qhc/gellmann.hpp"

namespace qhc::linmap {

namespace {

/// Vectorized accessible elements as columns; shared by the projection paths.
Eigen::MatrixXd accessible_columns(int n, const pauli::OrthonormalBasis& accessible) {
    const Eigen::Index d = (Eigen::Index(1) << (2 * n)) - 1;
    Eigen::MatrixXd w(d, Eigen::Index(accessible.size()));
    for (std::size_t i = 0; i < accessible.size(); ++i) {
        w.col(Eigen::Index(i)) = pauli::vectorize(accessible.element(i));
    }
    return w;
}

void check_accessible_dim(Eigen::Index dim, const pauli::OrthonormalBasis& accessible) {
    if (!accessible.empty() && accessible.dim() != dim) {
        throw std::invalid_argument("accessible basis dimension does not match operator space");
    }
}

/// In place: coords := proj_accessible(coords) - coords, the complement part
/// negated. Uses the coordinate mask for Pauli frames and the stacked column
/// matrix otherwise.
void project_and_negate(Eigen::Ref<Eigen::VectorXd> coords,
                        const pauli::OrthonormalBasis& accessible,
                        const Eigen::MatrixXd* w) {
    if (accessible.empty()) {
        coords = -coords;
        return;
    }
    if (accessible.frame_tag() == pauli::FrameTag::pauli_frame) {
        coords = -coords;
        for (const pauli::PauliString& p : accessible.strings()) {
            coords(Eigen::Index(p.index()) - 1) = 0.0;
        }
        return;
    }
    const Eigen::VectorXd overlap = w->transpose() * coords;
    coords = (*w) * overlap - coords;
}

}  // namespace

Eigen::MatrixXd build_m(const code::CodeSpec& code,
                        const pauli::OrthonormalBasis& accessible,
                        ExecPolicy policy) {
    const Eigen::Index d = (Eigen::Index(1) << (2 * code.n)) - 1;
    check_accessible_dim(code.dim(), accessible);
    const Eigen::MatrixXd w = accessible.empty() ||
                                      accessible.frame_tag() == pauli::FrameTag::pauli_frame
                                  ? Eigen::MatrixXd()
                                  : accessible_columns(code.n, accessible);
    const std::vector<pauli::PauliString> frame = pauli::all_strings(code.n);
    const double scale = 1.0 / std::sqrt(double(code.dim()));
    const std::complex<double> im(0.0, 1.0);
    Eigen::MatrixXd m(d, d);
    parallel_for(policy, std::size_t(d), [&](std::size_t col) {
        const Eigen::MatrixXcd conj = code.encoder *
                                      (im * scale * frame[col].to_dense()) *
                                      code.encoder.adjoint();
        Eigen::VectorXd coords =
            pauli::vectorize(pauli::SkewHermitian::unchecked(conj));
        project_and_negate(coords, accessible, &w);
        m.col(Eigen::Index(col)) = coords;
    });
    return m;
}

pauli::SkewHermitian apply_m(const pauli::SkewHermitian& v, const code::CodeSpec& code,
                             const pauli::OrthonormalBasis& accessible) {
    if (v.dim() != code.dim()) {
        throw std::invalid_argument("apply_m: operator dimension does not match code");
    }
    check_accessible_dim(code.dim(), accessible);
    const pauli::SkewHermitian conj = pauli::SkewHermitian::unchecked(
        code.encoder * v.matrix() * code.encoder.adjoint());
    const pauli::SkewHermitian p = pauli::project(conj, accessible);
    return pauli::SkewHermitian::unchecked(p.matrix() - conj.matrix());
}

Eigen::MatrixXd build_a(int n, int k, const std::vector<std::uint32_t>& k_map,
                        ExecPolicy policy) {
    const Eigen::Index d = (Eigen::Index(1) << (2 * n)) - 1;
    const Eigen::Index comp = (Eigen::Index(1) << n) - (Eigen::Index(1) << k);
    const std::vector<Eigen::MatrixXcd> frame = pauli::gellmann_basis(int(comp));
    Eigen::MatrixXd a(d, Eigen::Index(frame.size()));
    parallel_for(policy, frame.size(), [&](std::size_t j) {
        const pauli::SkewHermitian embedded =
            code::embed_stabilizer(frame[j], n, k, k_map);
        a.col(Eigen::Index(j)) = pauli::vectorize(embedded);
    });
    return a;
}

pauli::SkewHermitian apply_a(int n, int k, const std::vector<std::uint32_t>& k_map,
                             const Eigen::VectorXd& u) {
    const Eigen::Index comp = (Eigen::Index(1) << n) - (Eigen::Index(1) << k);
    if (u.size() != comp * comp - 1) {
        throw std::invalid_argument("apply_a: coordinate length must be (2^n - 2^k)^2 - 1");
    }
    const Eigen::MatrixXcd block = pauli::gellmann_assemble(int(comp), u);
    return code::embed_stabilizer(block, n, k, k_map);
}

Eigen::MatrixXd build_ma(const code::CodeSpec& code,
                         const pauli::OrthonormalBasis& accessible,
                         ExecPolicy policy) {
    check_accessible_dim(code.dim(), accessible);
    const pauli::OrthonormalBasis stab = code::stabilizer_basis(code, policy);
    const Eigen::MatrixXd w = accessible.empty() ||
                                      accessible.frame_tag() == pauli::FrameTag::pauli_frame
                                  ? Eigen::MatrixXd()
                                  : accessible_columns(code.n, accessible);
    const Eigen::Index d = (Eigen::Index(1) << (2 * code.n)) - 1;
    Eigen::MatrixXd ma(d, Eigen::Index(stab.size()));
    parallel_for(policy, stab.size(), [&](std::size_t j) {
        Eigen::VectorXd coords = pauli::vectorize(stab.element(j));
        project_and_negate(coords, accessible, &w);
        ma.col(Eigen::Index(j)) = coords;
    });
    return ma;
}

Eigen::MatrixXd pinv(const Eigen::MatrixXd& m, double rel_tol) {
    if (m.size() == 0) {
        return Eigen::MatrixXd::Zero(m.cols(), m.rows());
    }
    // JacobiSVD: BDCSVD's deflation mishandles the structured spectra these
    // projection matrices produce, yielding NaN factors.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double cutoff = rel_tol * (sigma.size() > 0 ? sigma(0) : 0.0);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(sigma.size());
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cutoff && sigma(i) > 0.0) {
            inv(i) = 1.0 / sigma(i);
        }
    }
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

}

#include "qhc/code.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qhc/gellmann.hpp"

namespace qhc::code {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_code_params(int n, int k) {
    if (n < 2 || n > 16) {
        throw std::invalid_argument("code: n must be in [2, 16]");
    }
    if (k < 1 || k >= n) {
        throw std::invalid_argument("code: k must satisfy 1 <= k < n");
    }
}

}  // namespace

CodeSpec CodeSpec::make(int n, int k, int d, Eigen::MatrixXcd encoder) {
    check_code_params(n, k);
    if (d < 0) {
        throw std::invalid_argument("code: distance must be nonnegative");
    }
    const Eigen::Index dim = Eigen::Index(1) << n;
    if (encoder.rows() != dim || encoder.cols() != dim) {
        throw std::invalid_argument("code: encoder must be 2^n x 2^n");
    }
    const Eigen::MatrixXcd gram = encoder.adjoint() * encoder;
    const double unitary_err =
        (gram - Eigen::MatrixXcd::Identity(dim, dim)).norm();
    if (unitary_err > 1e-10 * std::sqrt(double(dim))) {
        throw std::invalid_argument("code: encoder is not unitary");
    }
    const std::complex<double> det = encoder.determinant();
    if (std::abs(det - 1.0) > 1e-8) {
        throw std::invalid_argument("code: encoder determinant must be 1");
    }
    CodeSpec spec;
    spec.n = n;
    spec.k = k;
    spec.d = d;
    spec.encoder = std::move(encoder);
    spec.k_map = build_k(n, k);
    return spec;
}

LogicalHamiltonian LogicalHamiltonian::make(int k, pauli::SkewHermitian op) {
    if (k < 1 || k > 16) {
        throw std::invalid_argument("logical hamiltonian: k must be in [1, 16]");
    }
    if (op.dim() != (Eigen::Index(1) << k)) {
        throw std::invalid_argument("logical hamiltonian: operator must be 2^k x 2^k");
    }
    return LogicalHamiltonian{k, std::move(op)};
}

std::vector<std::uint32_t> build_k(int n, int k) {
    check_code_params(n, k);
    const std::uint32_t dim = 1u << n;
    const std::uint32_t logical = 1u << k;
    const std::uint32_t r = 1u << (n - k);
    std::vector<std::uint32_t> perm(dim);
    for (std::uint32_t psi = 0; psi < logical; ++psi) {
        perm[psi] = psi * r;
    }
    for (std::uint32_t m = 0; m < dim - logical; ++m) {
        const std::uint32_t i = m / (r - 1);
        const std::uint32_t j = m % (r - 1) + 1;
        perm[logical + m] = i * r + j;
    }
    return perm;
}

pauli::SkewHermitian embed_logical(const LogicalHamiltonian& h, int n,
                                   const std::vector<std::uint32_t>& k_map) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    if (Eigen::Index(k_map.size()) != dim) {
        throw std::invalid_argument("embed_logical: K map size does not match n");
    }
    const Eigen::Index logical = Eigen::Index(1) << h.k;
    if (logical > dim) {
        throw std::invalid_argument("embed_logical: logical dimension exceeds code dimension");
    }
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::MatrixXcd& m = h.op.matrix();
    for (Eigen::Index a = 0; a < logical; ++a) {
        for (Eigen::Index b = 0; b < logical; ++b) {
            y(k_map[a], k_map[b]) = m(a, b);
        }
    }
    return pauli::SkewHermitian::unchecked(std::move(y));
}

pauli::SkewHermitian embed_stabilizer(const Eigen::MatrixXcd& v, int n, int k,
                                      const std::vector<std::uint32_t>& k_map) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    const Eigen::Index logical = Eigen::Index(1) << k;
    const Eigen::Index comp = dim - logical;
    if (Eigen::Index(k_map.size()) != dim) {
        throw std::invalid_argument("embed_stabilizer: K map size does not match n");
    }
    if (v.rows() != comp || v.cols() != comp) {
        throw std::invalid_argument("embed_stabilizer: block must be (2^n - 2^k) square");
    }
    pauli::SkewHermitian checked(v);
    Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index a = 0; a < comp; ++a) {
        for (Eigen::Index b = 0; b < comp; ++b) {
            y(k_map[logical + a], k_map[logical + b]) = checked.matrix()(a, b);
        }
    }
    return pauli::SkewHermitian::unchecked(std::move(y));
}

Eigen::MatrixXcd extract_stabilizer_block(const Eigen::MatrixXcd& y, int n, int k,
                                          const std::vector<std::uint32_t>& k_map) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    const Eigen::Index logical = Eigen::Index(1) << k;
    const Eigen::Index comp = dim - logical;
    if (y.rows() != dim || y.cols() != dim || Eigen::Index(k_map.size()) != dim) {
        throw std::invalid_argument("extract_stabilizer_block: dimension mismatch");
    }
    Eigen::MatrixXcd v(comp, comp);
    for (Eigen::Index a = 0; a < comp; ++a) {
        for (Eigen::Index b = 0; b < comp; ++b) {
            v(a, b) = y(k_map[logical + a], k_map[logical + b]);
        }
    }
    return v;
}

pauli::SkewHermitian naive_encoding(const CodeSpec& code, const LogicalHamiltonian& h) {
    if (h.k != code.k) {
        throw std::invalid_argument("naive_encoding: logical qubit count does not match code");
    }
    const pauli::SkewHermitian embedded = embed_logical(h, code.n, code.k_map);
    Eigen::MatrixXcd out = code.encoder * embedded.matrix() * code.encoder.adjoint();
    return pauli::SkewHermitian::unchecked(std::move(out));
}

pauli::OrthonormalBasis stabilizer_basis(const CodeSpec& code, ExecPolicy policy) {
    const Eigen::Index dim = code.dim();
    const Eigen::Index logical = Eigen::Index(1) << code.k;
    const int comp = int(code.complement_dim());
    const std::vector<Eigen::MatrixXcd> frame = pauli::gellmann_basis(comp);
    std::vector<pauli::SkewHermitian> elements(frame.size(),
                                               pauli::SkewHermitian::zero(dim));
    parallel_for(policy, frame.size(), [&](std::size_t j) {
        Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index a = 0; a < comp; ++a) {
            for (Eigen::Index b = 0; b < comp; ++b) {
                y(code.k_map[logical + a], code.k_map[logical + b]) = frame[j](a, b);
            }
        }
        elements[j] = pauli::SkewHermitian::unchecked(
            code.encoder * y * code.encoder.adjoint());
    });
    return pauli::OrthonormalBasis::from_dense(std::move(elements), /*validate=*/false);
}

pauli::OrthonormalBasis logical_basis(const CodeSpec& code) {
    const Eigen::Index dim = code.dim();
    const double scale = 1.0 / std::sqrt(double(Eigen::Index(1) << code.k));
    const std::complex<double> im(0.0, 1.0);
    std::vector<pauli::SkewHermitian> elements;
    elements.reserve((std::size_t(1) << (2 * code.k)) - 1);
    for (const pauli::PauliString& p : pauli::all_strings(code.k)) {
        if (p.index() == 0) {
            continue;
        }
        const Eigen::MatrixXcd frame_elem = im * scale * p.to_dense();
        Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(dim, dim);
        const Eigen::Index logical = frame_elem.rows();
        for (Eigen::Index a = 0; a < logical; ++a) {
            for (Eigen::Index b = 0; b < logical; ++b) {
                y(code.k_map[a], code.k_map[b]) = frame_elem(a, b);
            }
        }
        elements.push_back(pauli::SkewHermitian::unchecked(
            code.encoder * y * code.encoder.adjoint()));
    }
    return pauli::OrthonormalBasis::from_dense(std::move(elements), /*validate=*/false);
}

pauli::SkewHermitian traceless_log(const Eigen::MatrixXcd& u, double unitary_tol) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw std::invalid_argument("traceless_log: input must be square");
    }
    const Eigen::Index dim = u.rows();
    const double unitary_err =
        (u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim)).norm();
    if (unitary_err > unitary_tol * std::sqrt(double(dim))) {
        throw std::invalid_argument("traceless_log: input is not unitary");
    }
    Eigen::ComplexSchur<Eigen::MatrixXcd> schur(u);
    if (schur.info() != Eigen::Success) {
        throw std::runtime_error("traceless_log: Schur decomposition failed");
    }
    // A unitary matrix is normal, so the triangular factor is diagonal up to
    // rounding and the unitary Schur factor holds orthonormal eigenvectors.
    Eigen::VectorXd phases(dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        double phi = std::arg(schur.matrixT()(j, j));
        if (phi <= -kPi) {
            phi += 2.0 * kPi;
        }
        phases(j) = phi;
    }
    const double mean = phases.sum() / double(dim);
    Eigen::MatrixXcd core = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        core(j, j) = std::complex<double>(0.0, phases(j) - mean);
    }
    Eigen::MatrixXcd h = schur.matrixU() * core * schur.matrixU().adjoint();
    h = 0.5 * (h - h.adjoint().eval());
    const std::complex<double> trace = h.trace();
    h -= (trace / double(dim)) * Eigen::MatrixXcd::Identity(dim, dim);
    return pauli::SkewHermitian::unchecked(std::move(h));
}

CodeSpec builtin_code(const std::string& name) {
    if (name != "[[4,2,2]]") {
        throw std::invalid_argument("builtin_code: unknown code '" + name +
                                    "' (available: [[4,2,2]])");
    }
    // Two nonzero entries per row; unit parts scaled by 1/sqrt(2).
    struct Entry {
        int col;
        double re;
        double im;
    };
    static const Entry table[16][2] = {
        {{0, 1, 0}, {2, 1, 0}},     {{5, 0, -1}, {7, 0, 1}},
        {{13, 0, 1}, {15, 0, 1}},   {{8, -1, 0}, {10, 1, 0}},
        {{1, 0, -1}, {3, 0, 1}},    {{4, 1, 0}, {6, 1, 0}},
        {{12, -1, 0}, {14, 1, 0}},  {{9, 0, 1}, {11, 0, 1}},
        {{9, 0, -1}, {11, 0, 1}},   {{12, 1, 0}, {14, 1, 0}},
        {{4, -1, 0}, {6, 1, 0}},    {{1, 0, 1}, {3, 0, 1}},
        {{8, 1, 0}, {10, 1, 0}},    {{13, 0, -1}, {15, 0, 1}},
        {{5, 0, 1}, {7, 0, 1}},     {{0, -1, 0}, {2, 1, 0}},
    };
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(16, 16);
    for (int row = 0; row < 16; ++row) {
        for (const Entry& e : table[row]) {
            c(row, e.col) = std::complex<double>(e.re * s, e.im * s);
        }
    }
    return CodeSpec::make(4, 2, 2, std::move(c));
}

std::vector<EncoderRowCheck> validate_encoder(const CodeSpec& code,
                                              const std::vector<pauli::PauliString>& f_rows,
                                              double tol) {
    if (Eigen::Index(f_rows.size()) != 2 * code.n) {
        throw std::invalid_argument("validate_encoder: expected 2n image rows");
    }
    std::vector<EncoderRowCheck> checks;
    checks.reserve(f_rows.size());
    for (int row = 0; row < 2 * code.n; ++row) {
        const bool is_x = row < code.n;
        const int qubit = is_x ? row : row - code.n;
        const std::uint64_t bit = std::uint64_t(1) << (code.n - 1 - qubit);
        const pauli::PauliString basis_op(code.n, is_x ? bit : 0, is_x ? 0 : bit);
        const Eigen::MatrixXcd image =
            code.encoder * basis_op.to_dense() * code.encoder.adjoint();
        const Eigen::MatrixXcd expected = f_rows[row].to_dense();
        EncoderRowCheck check;
        check.row = row;
        check.expected = f_rows[row].label();
        if ((image - expected).norm() <= tol) {
            check.pass = true;
            check.sign = 1;
            check.observed = check.expected;
        } else if ((image + expected).norm() <= tol) {
            check.pass = true;
            check.sign = -1;
            check.observed = "-" + check.expected;
        } else {
            check.pass = false;
            check.sign = 0;
            check.observed = "unrecognized";
        }
        checks.push_back(std::move(check));
    }
    return checks;
}

}

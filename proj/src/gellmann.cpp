#include "qhc/gellmann.hpp"

#include <cmath>
#include <stdexcept>

namespace qhc::pauli {

namespace {

const std::complex<double> imag_unit(0, 1);

void check_dim(int d) {
    if (d < 2) {
        throw std::invalid_argument("gellmann: dimension must be at least 2");
    }
}

}  // namespace

std::vector<Eigen::MatrixXcd> gellmann_basis(int d) {
    check_dim(d);
    std::vector<Eigen::MatrixXcd> out;
    out.reserve(static_cast<std::size_t>(d) * d - 1);
    const double r2 = std::sqrt(2.0);
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Eigen::MatrixXcd sym = Eigen::MatrixXcd::Zero(d, d);
            sym(j, k) = imag_unit / r2;
            sym(k, j) = imag_unit / r2;
            out.push_back(std::move(sym));
            Eigen::MatrixXcd anti = Eigen::MatrixXcd::Zero(d, d);
            anti(j, k) = 1.0 / r2;
            anti(k, j) = -1.0 / r2;
            out.push_back(std::move(anti));
        }
    }
    for (int l = 1; l < d; ++l) {
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
        const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) diag(j, j) = imag_unit * scale;
        diag(l, l) = -imag_unit * (static_cast<double>(l) * scale);
        out.push_back(std::move(diag));
    }
    return out;
}

Eigen::VectorXd gellmann_coords(const Eigen::MatrixXcd& m) {
    const int d = static_cast<int>(m.rows());
    check_dim(d);
    if (m.cols() != d) {
        throw std::invalid_argument("gellmann_coords: matrix must be square");
    }
    Eigen::VectorXd out(static_cast<Eigen::Index>(d) * d - 1);
    const double r2 = std::sqrt(2.0);
    Eigen::Index idx = 0;
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            out(idx++) = (m(j, k).imag() + m(k, j).imag()) / r2;
            out(idx++) = (m(j, k).real() - m(k, j).real()) / r2;
        }
    }
    double prefix_imag = 0;
    for (int l = 1; l < d; ++l) {
        prefix_imag += m(l - 1, l - 1).imag();
        const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        out(idx++) = (prefix_imag - l * m(l, l).imag()) * scale;
    }
    return out;
}

Eigen::MatrixXcd gellmann_assemble(int d, const Eigen::VectorXd& coords) {
    check_dim(d);
    const Eigen::Index expected = static_cast<Eigen::Index>(d) * d - 1;
    if (coords.size() != expected) {
        throw std::invalid_argument("gellmann_assemble: expected " + std::to_string(expected) +
                                    " coordinates, got " + std::to_string(coords.size()));
    }
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d, d);
    const double r2 = std::sqrt(2.0);
    Eigen::Index idx = 0;
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            const double s = coords(idx++);
            const double a = coords(idx++);
            out(j, k) += imag_unit * (s / r2) + (a / r2);
            out(k, j) += imag_unit * (s / r2) - (a / r2);
        }
    }
    for (int l = 1; l < d; ++l) {
        const double c = coords(idx++);
        const double scale = c / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int j = 0; j < l; ++j) out(j, j) += imag_unit * scale;
        out(l, l) -= imag_unit * (static_cast<double>(l) * scale);
    }
    return out;
}

}

#include "qhc/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace qhc::solver {

namespace {

double soft_threshold(double x, double kappa) {
    if (x > kappa) {
        return x - kappa;
    }
    if (x < -kappa) {
        return x + kappa;
    }
    return 0.0;
}

}  // namespace

Eigen::VectorXd admm_lasso(const Eigen::MatrixXd& p_mat, const Eigen::VectorXd& b,
                           const Eigen::MatrixXd& f_mat, const Eigen::VectorXd& f0,
                           double lambda, const AdmmParams& params, AdmmInfo* info) {
    if (p_mat.rows() != b.size() || f_mat.rows() != f0.size() ||
        p_mat.cols() != f_mat.cols()) {
        throw std::invalid_argument("admm_lasso: dimension mismatch");
    }
    if (!(lambda >= 0.0) || !(params.rho > 0.0) || params.max_iterations < 1) {
        throw std::invalid_argument("admm_lasso: invalid parameters");
    }
    const Eigen::Index pdim = p_mat.cols();
    const Eigen::Index zdim = f_mat.rows();
    const double rho = params.rho;

    // Splitting z = F u + f0 turns the l1 term into a separable prox; the
    // u-update is a fixed positive-definite solve prepared once.
    const Eigen::MatrixXd normal =
        2.0 * (p_mat.transpose() * p_mat) + rho * (f_mat.transpose() * f_mat);
    const Eigen::LDLT<Eigen::MatrixXd> factor(normal);
    if (factor.info() != Eigen::Success) {
        throw std::runtime_error("admm_lasso: normal matrix factorization failed");
    }
    const Eigen::VectorXd rhs_base = 2.0 * (p_mat.transpose() * b);

    Eigen::VectorXd u = Eigen::VectorXd::Zero(pdim);
    Eigen::VectorXd z = f0;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(zdim);

    AdmmInfo state;
    for (int iter = 1; iter <= params.max_iterations; ++iter) {
        u = factor.solve(rhs_base + rho * (f_mat.transpose() * (z - f0 - c)));
        const Eigen::VectorXd fu = f_mat * u + f0;
        const Eigen::VectorXd z_prev = z;
        for (Eigen::Index i = 0; i < zdim; ++i) {
            z(i) = soft_threshold(fu(i) + c(i), lambda / rho);
        }
        c += fu - z;

        state.iterations = iter;
        state.primal_residual = (fu - z).norm();
        state.dual_residual = rho * (f_mat.transpose() * (z - z_prev)).norm();
        const double eps_pri = std::sqrt(double(zdim)) * params.abs_tol +
                               params.rel_tol * std::max(fu.norm(), z.norm());
        const double eps_dual = std::sqrt(double(pdim)) * params.abs_tol +
                                params.rel_tol * (rho * (f_mat.transpose() * c)).norm();
        if (state.primal_residual <= eps_pri && state.dual_residual <= eps_dual) {
            state.converged = true;
            break;
        }
    }
    if (info != nullptr) {
        *info = state;
    }
    return u;
}

}

#include "qhc/run.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhc/config.hpp"
#include "qhc/report.hpp"
#include "qhc/solver.hpp"
#include "qhc/sweep.hpp"
#include "qhc/verify.hpp"

namespace qhc::io {

namespace {

std::string mode_name(solver::SolveMode mode) {
    switch (mode) {
        case solver::SolveMode::plain:
            return "plain";
        case solver::SolveMode::fast:
            return "fast";
        case solver::SolveMode::weighted:
            return "weighted";
        case solver::SolveMode::regularized:
            return "regularized";
    }
    return "unknown";
}

solver::SolveMode mode_from_name(const std::string& name) {
    if (name == "plain") return solver::SolveMode::plain;
    if (name == "fast") return solver::SolveMode::fast;
    if (name == "weighted") return solver::SolveMode::weighted;
    if (name == "regularized") return solver::SolveMode::regularized;
    throw std::runtime_error("unknown mode '" + name + "'");
}

/// Forced-correction pipeline: the naive encoding plus a seeded random
/// stabilizer element, bypassing the least-squares solve.
solver::CompilationResult random_stabilizer_result(const solver::CompilationProblem& p,
                                                   std::uint64_t seed) {
    const double start = now_seconds();
    const pauli::SkewHermitian naive = code::naive_encoding(p.code, p.h_logical);
    const pauli::SkewHermitian correction = solver::random_stabilizer(p.code, seed);
    pauli::SkewHermitian total =
        pauli::SkewHermitian::unchecked(naive.matrix() + correction.matrix());
    const double residual = solver::accessibility_residual(total, p.accessible);
    const int comp = int(p.code.complement_dim());
    solver::CompilationResult result{
        pauli::SkewHermitian::unchecked(code::extract_stabilizer_block(
            p.code.encoder.adjoint() * correction.matrix() * p.code.encoder,
            p.code.n, p.code.k, p.code.k_map)),
        correction,
        pauli::SkewHermitian::zero(0),
        Eigen::VectorXd::Zero(Eigen::Index(comp) * comp - 1),
        residual,
        false,
        pauli::PauliSum(p.code.n),
        0.0,
        std::nullopt,
    };
    result.accessible =
        residual <= p.accessibility_tol * std::max(1.0, total.hs_norm());
    result.pauli_terms = pauli::PauliSum::from_skew(total);
    result.h_total = std::move(total);
    result.solve_seconds = now_seconds() - start;
    return result;
}

}  // namespace

int run_compile(const RunOptions& options, std::ostream& out) {
    const double start = now_seconds();
    LoadedProblem loaded = parse_problem(options.config_path);
    if (options.mode_override.has_value()) {
        loaded.problem.mode = mode_from_name(*options.mode_override);
    }
    if (options.lambda_override.has_value()) {
        loaded.problem.lambda = *options.lambda_override;
    }
    if (options.seed_override.has_value()) {
        loaded.seed = *options.seed_override;
    }
    loaded.problem.policy = options.policy;
    loaded.problem.validate();

    const solver::CompilationResult result =
        options.random_stabilizer
            ? random_stabilizer_result(loaded.problem, loaded.seed)
            : solver::solve(loaded.problem);
    const verify::VerificationReport verification = verify::verify_result(
        loaded.problem.code, result.h_total, loaded.problem.h_logical,
        loaded.problem.accessible);

    Report report = build_report(loaded, mode_name(loaded.problem.mode), result,
                                 verification);
    report.random_stabilizer = options.random_stabilizer;
    if (options.sweep_permutations) {
        report.sweep = permutation_sweep(loaded.problem, options.max_perms, loaded.seed);
    }
    report.total_seconds = now_seconds() - start;

    if (options.out_path.empty()) {
        emit_report(report, out);
    } else {
        emit_report(report, options.out_path);
        out << "residual " << report.residual << ", accessible "
            << (report.accessible ? "true" : "false") << ", " << report.term_count
            << " Pauli terms; report written to " << options.out_path << "\n";
    }
    return report.accessible ? exit_accessible : exit_inaccessible;
}

}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "oracles.hpp"
#include "qhc/closure.hpp"
#include "qhc/code.hpp"
#include "qhc/gellmann.hpp"
#include "qhc/config.hpp"
#include "qhc/graph.hpp"
#include "qhc/linmap.hpp"
#include "qhc/solver.hpp"
#include "qhc/verify.hpp"

using qhc::code::CodeSpec;
using qhc::code::LogicalHamiltonian;
using qhc::pauli::ConnectivityGraph;
using qhc::pauli::OrthonormalBasis;
using qhc::pauli::PauliString;
using qhc::pauli::SkewHermitian;
using qhc::solver::CompilationProblem;
using qhc::solver::CompilationResult;
using qhc::solver::SolveMode;
using qhc::solver::WeightMap;

namespace {

LogicalHamiltonian cnot_logical() {
    return LogicalHamiltonian::make(
        2, qhc::code::traceless_log(qhc::io::builtin_logical_unitary("CNOT")));
}

CompilationProblem base_problem(const std::vector<std::pair<int, int>>& edges) {
    const ConnectivityGraph graph = ConnectivityGraph::from_edges(4, edges);
    return CompilationProblem{
        qhc::code::builtin_code("[[4,2,2]]"),
        cnot_logical(),
        qhc::pauli::lie_closure_strings(4, qhc::pauli::graph_generators(graph)),
        SolveMode::plain,
        0.0,
        WeightMap{},
        1e-10,
        1e-8,
        qhc::ExecPolicy::serial,
        graph,
    };
}

CompilationProblem toy_problem() { return base_problem({{1, 3}}); }

CompilationProblem square_problem() {
    return base_problem({{0, 2}, {1, 3}, {0, 1}, {2, 3}});
}

/// Objective re-evaluated from scratch for a candidate gauge coordinate
/// vector: the accessibility residual of naive + correction(u).
double objective_at(const CompilationProblem& p, const Eigen::VectorXd& u) {
    const SkewHermitian embedded =
        qhc::linmap::apply_a(p.code.n, p.code.k, p.code.k_map, u);
    const SkewHermitian corr = SkewHermitian::unchecked(
        p.code.encoder * embedded.matrix() * p.code.encoder.adjoint());
    const SkewHermitian naive = qhc::code::naive_encoding(p.code, p.h_logical);
    const SkewHermitian total =
        SkewHermitian::unchecked(naive.matrix() + corr.matrix());
    return qhc::solver::accessibility_residual(total, p.accessible);
}

void check_result_invariants(const CompilationProblem& p, const CompilationResult& r) {
    const SkewHermitian naive = qhc::code::naive_encoding(p.code, p.h_logical);
    CHECK((r.h_total.matrix() - r.h_correction.matrix() - naive.matrix()).norm() < 1e-10);

    const OrthonormalBasis stab = qhc::code::stabilizer_basis(p.code);
    const SkewHermitian proj = qhc::pauli::project(r.h_correction, stab);
    CHECK((r.h_correction.matrix() - proj.matrix()).norm() <= 1e-9);

    // h_stabilizer is the pre-embedding block of the correction.
    const Eigen::MatrixXcd block = qhc::code::extract_stabilizer_block(
        p.code.encoder.adjoint() * r.h_correction.matrix() * p.code.encoder, p.code.n,
        p.code.k, p.code.k_map);
    CHECK((r.h_stabilizer.matrix() - block).norm() < 1e-9);
    CHECK((qhc::pauli::gellmann_coords(r.h_stabilizer.matrix()) - r.stabilizer_coords)
              .norm() < 1e-9);
}

}  // namespace

TEST_CASE("zero logical hamiltonian gives the zero solution in every mode") {
    CompilationProblem p = toy_problem();
    p.h_logical = LogicalHamiltonian::make(2, SkewHermitian::zero(4));
    for (const SolveMode mode : {SolveMode::plain, SolveMode::fast, SolveMode::weighted,
                                 SolveMode::regularized}) {
        p.mode = mode;
        const CompilationResult r = qhc::solver::solve(p);
        CHECK(r.h_correction.matrix().norm() < 1e-9);
        CHECK(r.residual < 1e-9);
        CHECK(r.accessible);
    }
}

TEST_CASE("the naive CNOT encoding is inaccessible on the single-edge graph") {
    const CompilationProblem p = toy_problem();
    const SkewHermitian naive = qhc::code::naive_encoding(p.code, p.h_logical);
    CHECK(qhc::solver::accessibility_residual(naive, p.accessible) > 1e-3);
}

TEST_CASE("solve_plain recovers an accessible toy solution") {
    const CompilationProblem p = toy_problem();
    const CompilationResult r = qhc::solver::solve_plain(p);
    CHECK(r.accessible);
    CHECK(r.residual <= 1e-8 * std::max(1.0, r.h_total.hs_norm()));
    CHECK(qhc::verify::codespace_action_error(p.code, r.h_total, p.h_logical) <= 1e-8);
    check_result_invariants(p, r);
    CHECK(r.solve_seconds >= 0.0);
    CHECK(!r.admm.has_value());
}

TEST_CASE("solve_plain returns the zero correction on the four-edge graph") {
    const CompilationProblem p = square_problem();
    const SkewHermitian naive = qhc::code::naive_encoding(p.code, p.h_logical);
    CHECK(qhc::solver::accessibility_residual(naive, p.accessible) <=
          1e-8 * std::max(1.0, naive.hs_norm()));

    const CompilationResult r = qhc::solver::solve_plain(p);
    CHECK(r.accessible);
    CHECK(r.h_correction.matrix().norm() < 1e-8);
    check_result_invariants(p, r);
}

TEST_CASE("solve_plain minimizer survives random perturbations") {
    const CompilationProblem p = toy_problem();
    const CompilationResult r = qhc::solver::solve_plain(p);
    const Eigen::VectorXd u_star = r.stabilizer_coords;
    CHECK(objective_at(p, u_star) == doctest::Approx(r.residual).epsilon(1e-8));

    std::mt19937_64 gen(83);
    std::normal_distribution<double> dist(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Eigen::VectorXd delta(u_star.size());
        for (Eigen::Index j = 0; j < delta.size(); ++j) {
            delta(j) = dist(gen);
        }
        delta *= (trial % 2 == 0) ? 1e-3 : 1.0;
        CHECK(objective_at(p, u_star + delta) >= r.residual - 1e-9);
    }
}

TEST_CASE("solve_fast matches solve_plain on the shipped instances") {
    for (const CompilationProblem& p : {toy_problem(), square_problem()}) {
        const CompilationResult plain = qhc::solver::solve_plain(p);
        const CompilationResult fast = qhc::solver::solve_fast(p);
        CHECK(std::abs(plain.residual - fast.residual) <= 1e-8);
        CHECK(plain.accessible == fast.accessible);
        check_result_invariants(p, fast);

        // Solutions agree once the nullspace of the composed map is removed.
        const Eigen::MatrixXd ma = qhc::linmap::build_ma(p.code, p.accessible);
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(
            ma, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const double cutoff = 1e-10 * svd.singularValues()(0);
        Eigen::VectorXd diff = fast.stabilizer_coords - plain.stabilizer_coords;
        Eigen::VectorXd row_space_part = Eigen::VectorXd::Zero(diff.size());
        for (Eigen::Index j = 0; j < svd.singularValues().size(); ++j) {
            if (svd.singularValues()(j) > cutoff) {
                const Eigen::VectorXd v = svd.matrixV().col(j);
                row_space_part += v.dot(diff) * v;
            }
        }
        CHECK(row_space_part.norm() <= 1e-7);
    }
}

TEST_CASE("solve_fast matches solve_plain on random small instances") {
    std::mt19937_64 gen(89);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + int(gen() % 2);
        const int k = 1 + (n == 3 ? int(gen() % 2) : 0);
        const oracles::RandomInstance inst = oracles::random_instance(n, k, gen());
        const CompilationProblem p = oracles::problem_from(inst);
        const CompilationResult plain = qhc::solver::solve_plain(p);
        const CompilationResult fast = qhc::solver::solve_fast(p);
        CHECK(std::abs(plain.residual - fast.residual) <= 1e-8);
    }
}

TEST_CASE("solve dispatches on the mode field") {
    CompilationProblem p = toy_problem();
    p.mode = SolveMode::fast;
    const CompilationResult direct = qhc::solver::solve_fast(p);
    const CompilationResult dispatched = qhc::solver::solve(p);
    CHECK(dispatched.residual == doctest::Approx(direct.residual).epsilon(1e-12));
    CHECK((dispatched.h_total.matrix() - direct.h_total.matrix()).norm() < 1e-12);
}

TEST_CASE("all-zero weights give the zero correction") {
    CompilationProblem p = toy_problem();
    p.mode = SolveMode::weighted;
    p.weights.default_weight = 0.0;
    const CompilationResult r = qhc::solver::solve_weighted(p);
    CHECK(r.h_correction.matrix().norm() < 1e-12);
    CHECK(r.residual == doctest::Approx(0.0));
}

TEST_CASE("complement weights reproduce the plain objective") {
    CompilationProblem p = square_problem();
    const CompilationResult plain = qhc::solver::solve_plain(p);

    p.mode = SolveMode::weighted;
    p.weights.default_weight = 1.0;
    for (const PauliString& s : p.accessible.strings()) {
        p.weights.overrides[s.index()] = 0.0;
    }
    const CompilationResult weighted = qhc::solver::solve_weighted(p);
    CHECK(std::abs(weighted.residual - plain.residual) <= 1e-9);
    CHECK(weighted.accessible == plain.accessible);

    CompilationProblem toy = toy_problem();
    const CompilationResult toy_plain = qhc::solver::solve_plain(toy);
    toy.mode = SolveMode::weighted;
    for (const PauliString& s : toy.accessible.strings()) {
        toy.weights.overrides[s.index()] = 0.0;
    }
    const CompilationResult toy_weighted = qhc::solver::solve_weighted(toy);
    CHECK(std::abs(toy_weighted.residual - toy_plain.residual) <= 1e-9);
}

TEST_CASE("uniform weights with a trivial accessible algebra keep the naive encoding") {
    CompilationProblem p = toy_problem();
    p.mode = SolveMode::weighted;
    p.accessible = OrthonormalBasis::from_pauli_strings(4, {});
    p.connectivity.reset();
    const CompilationResult r = qhc::solver::solve_weighted(p);
    const SkewHermitian naive = qhc::code::naive_encoding(p.code, p.h_logical);
    CHECK(r.h_correction.matrix().norm() < 1e-9);
    CHECK(r.residual == doctest::Approx(naive.hs_norm()).epsilon(1e-9));
    CHECK(!r.accessible);
}

TEST_CASE("weighted objective matches a dense least-squares oracle") {
    std::mt19937_64 gen(97);
    std::uniform_real_distribution<double> wdist(0.0, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        const oracles::RandomInstance inst = oracles::random_instance(2, 1, gen());
        CompilationProblem p = oracles::problem_from(inst);
        p.mode = SolveMode::weighted;
        p.weights.default_weight = wdist(gen);
        for (const PauliString& s : qhc::pauli::all_strings(2)) {
            if (gen() % 2 == 0) {
                p.weights.overrides[s.index()] = wdist(gen);
            }
        }
        const CompilationResult r = qhc::solver::solve_weighted(p);

        // Oracle: minimize ||J (T c + t0)|| over the stabilizer span directly.
        const OrthonormalBasis stab = qhc::code::stabilizer_basis(p.code);
        const Eigen::VectorXd j = p.weights.diagonal(p.code.n);
        Eigen::MatrixXd t(j.size(), Eigen::Index(stab.size()));
        for (std::size_t col = 0; col < stab.size(); ++col) {
            t.col(Eigen::Index(col)) = qhc::pauli::vectorize(stab.element(col));
        }
        const Eigen::VectorXd t0 =
            qhc::pauli::vectorize(qhc::code::naive_encoding(p.code, p.h_logical));
        const Eigen::MatrixXd jt = j.asDiagonal() * t;
        const Eigen::VectorXd jt0 = j.cwiseProduct(t0);
        const Eigen::VectorXd c =
            jt.completeOrthogonalDecomposition().solve(-jt0);
        const double oracle = (jt * c + jt0).norm();
        CHECK(std::abs(r.residual - oracle) <= 1e-8);
    }
}

TEST_CASE("weight maps validate and expand to diagonals") {
    WeightMap w;
    w.default_weight = 2.0;
    w.overrides[PauliString::from_label("XI").index()] = 0.25;
    const Eigen::VectorXd diag = w.diagonal(2);
    REQUIRE(diag.size() == 15);
    CHECK(diag(Eigen::Index(PauliString::from_label("XI").index()) - 1) ==
          doctest::Approx(0.25));
    CHECK(diag(Eigen::Index(PauliString::from_label("IZ").index()) - 1) ==
          doctest::Approx(2.0));

    WeightMap bad;
    bad.default_weight = -1.0;
    CHECK_THROWS(bad.validate());
}

TEST_CASE("regularized solve at lambda zero matches the plain objective") {
    CompilationProblem p = toy_problem();
    const CompilationResult plain = qhc::solver::solve_plain(p);
    p.mode = SolveMode::regularized;
    p.lambda = 0.0;
    const CompilationResult reg = qhc::solver::solve_regularized(p);
    CHECK(std::abs(reg.residual - plain.residual) <= 1e-6);
    REQUIRE(reg.admm.has_value());
    CHECK(reg.admm->converged);
    check_result_invariants(p, reg);
}

TEST_CASE("l1 norm of the solution is non-increasing in lambda") {
    CompilationProblem p = toy_problem();
    p.mode = SolveMode::regularized;
    double previous = -1.0;
    for (const double lambda : {0.0, 0.1, 0.5, 1.0, 5.0}) {
        p.lambda = lambda;
        const CompilationResult r = qhc::solver::solve_regularized(p);
        const double l1 = r.pauli_terms.l1_norm();
        if (previous >= 0.0) {
            CHECK(l1 <= previous + 1e-9);
        }
        previous = l1;
        CHECK(qhc::verify::codespace_action_error(p.code, r.h_total, p.h_logical) <= 1e-8);
    }
}

TEST_CASE("admm_lasso agrees with a grid-search oracle on two variables") {
    Eigen::MatrixXd pm(4, 2);
    pm << 1.0, 0.3, -0.2, 1.1, 0.5, -0.7, 0.0, 0.4;
    Eigen::VectorXd b(4);
    b << 0.7, -1.2, 0.3, 0.9;
    Eigen::MatrixXd f(3, 2);
    f << 0.9, 0.1, -0.4, 1.0, 0.2, 0.2;
    Eigen::VectorXd f0(3);
    f0 << 0.5, -0.3, 0.1;
    const double lambda = 0.7;

    const auto objective = [&](const Eigen::VectorXd& u) {
        return (pm * u - b).squaredNorm() + lambda * (f * u + f0).lpNorm<1>();
    };

    qhc::solver::AdmmInfo info;
    const Eigen::VectorXd u =
        qhc::solver::admm_lasso(pm, b, f, f0, lambda, qhc::solver::AdmmParams{}, &info);
    CHECK(info.converged);

    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd grid_point(2);
    for (int i = -300; i <= 300; ++i) {
        for (int j = -300; j <= 300; ++j) {
            grid_point << i * 0.01, j * 0.01;
            best = std::min(best, objective(grid_point));
        }
    }
    CHECK(objective(u) <= best + 1e-3);
}

TEST_CASE("accessibility_residual geometry") {
    const CompilationProblem p = square_problem();
    std::mt19937_64 gen(101);

    const SkewHermitian member = p.accessible.element(gen() % p.accessible.size());
    CHECK(qhc::solver::accessibility_residual(member, p.accessible) < 1e-12);

    const OrthonormalBasis x_frame = OrthonormalBasis::from_pauli_strings(
        1, {PauliString::from_label("X")});
    const SkewHermitian z =
        SkewHermitian(std::complex<double>(0, 1) * oracles::dense_pauli("Z"));
    CHECK(qhc::solver::accessibility_residual(z, x_frame) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    for (int trial = 0; trial < 20; ++trial) {
        const SkewHermitian h = oracles::random_skew(16, gen());
        const double residual = qhc::solver::accessibility_residual(h, p.accessible);
        const double projected = qhc::pauli::project(h, p.accessible).hs_norm();
        CHECK(residual * residual + projected * projected ==
              doctest::Approx(h.hs_norm() * h.hs_norm()).epsilon(1e-9));
    }
}

TEST_CASE("correctible accessibility distinguishes joint-span membership") {
    const CompilationProblem toy = toy_problem();

    const SkewHermitian member = toy.accessible.element(0);
    CHECK(qhc::solver::is_correctibly_accessible(member, toy.code, toy.accessible)
              .accessible);

    const SkewHermitian naive = qhc::code::naive_encoding(toy.code, toy.h_logical);
    const auto naive_check =
        qhc::solver::is_correctibly_accessible(naive, toy.code, toy.accessible);
    CHECK(naive_check.accessible);
    CHECK(naive_check.joint_dim > toy.accessible.size());

    // An operator built orthogonal to the joint span must be rejected.
    const OrthonormalBasis joint = qhc::pauli::orthonormalize_union(
        toy.accessible, qhc::code::stabilizer_basis(toy.code));
    std::mt19937_64 gen(103);
    SkewHermitian h = oracles::random_skew(16, gen());
    const SkewHermitian proj = qhc::pauli::project(h, joint);
    const SkewHermitian complement = SkewHermitian(h.matrix() - proj.matrix());
    REQUIRE(complement.hs_norm() > 1e-6);
    CHECK(!qhc::solver::is_correctibly_accessible(complement, toy.code, toy.accessible)
               .accessible);
}

TEST_CASE("random stabilizers are deterministic unit-norm span members") {
    const CodeSpec code = qhc::code::builtin_code("[[4,2,2]]");
    const SkewHermitian a = qhc::solver::random_stabilizer(code, 42);
    const SkewHermitian b = qhc::solver::random_stabilizer(code, 42);
    CHECK((a.matrix() - b.matrix()).norm() == 0.0);

    const SkewHermitian c = qhc::solver::random_stabilizer(code, 43);
    CHECK((a.matrix() - c.matrix()).norm() > 1e-3);

    CHECK(a.hs_norm() == doctest::Approx(1.0).epsilon(1e-12));
    const OrthonormalBasis stab = qhc::code::stabilizer_basis(code);
    const SkewHermitian proj = qhc::pauli::project(a, stab);
    CHECK((a.matrix() - proj.matrix()).norm() <= 1e-10);
}

TEST_CASE("random stabilizer corrections are mostly inaccessible on the four-edge graph") {
    const CompilationProblem p = square_problem();
    const SkewHermitian naive = qhc::code::naive_encoding(p.code, p.h_logical);
    int inaccessible = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SkewHermitian s = qhc::solver::random_stabilizer(p.code, seed);
        const SkewHermitian total =
            SkewHermitian::unchecked(naive.matrix() + s.matrix());
        const double residual = qhc::solver::accessibility_residual(total, p.accessible);
        if (residual > p.accessibility_tol * std::max(1.0, total.hs_norm())) {
            ++inaccessible;
        }
    }
    CHECK(inaccessible >= 8);
}

TEST_CASE("gauge corrections act trivially on the codespace in every mode") {
    CompilationProblem p = toy_problem();
    const LogicalHamiltonian zero_logical =
        LogicalHamiltonian::make(2, SkewHermitian::zero(4));
    for (const SolveMode mode : {SolveMode::plain, SolveMode::fast, SolveMode::weighted,
                                 SolveMode::regularized}) {
        p.mode = mode;
        p.lambda = (mode == SolveMode::regularized) ? 0.1 : 0.0;
        const CompilationResult r = qhc::solver::solve(p);
        CHECK(qhc::verify::codespace_action_error(p.code, r.h_correction, zero_logical) <=
              1e-9);
        CHECK(qhc::verify::codespace_action_error(p.code, r.h_total, p.h_logical) <= 1e-8);
    }
}

TEST_CASE("problem validation catches bad fields") {
    CompilationProblem p = toy_problem();
    p.lambda = -0.5;
    CHECK_THROWS(p.validate());

    CompilationProblem q = toy_problem();
    q.weights.default_weight = -1.0;
    CHECK_THROWS(q.validate());

    CompilationProblem r = toy_problem();
    r.accessible = OrthonormalBasis::from_pauli_strings(3, qhc::pauli::all_strings(3));
    CHECK_THROWS(r.validate());
}

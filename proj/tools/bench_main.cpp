#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qhc/closure.hpp"
#include "qhc/code.hpp"
#include "qhc/graph.hpp"
#include "qhc/kernels.hpp"
#include "qhc/linmap.hpp"
#include "qhc/verify.hpp"

namespace {

using qhc::ExecPolicy;

/// Deterministic special-unitary encoder: exponential of a seeded Gaussian
/// traceless skew-Hermitian matrix.
Eigen::MatrixXcd random_encoder(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXcd a(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            a(r, c) = std::complex<double>(dist(gen), dist(gen));
        }
    }
    Eigen::MatrixXcd h = 0.5 * (a - a.adjoint().eval());
    h -= (h.trace() / double(dim)) * Eigen::MatrixXcd::Identity(dim, dim);
    return qhc::verify::expm_skew(qhc::pauli::SkewHermitian(std::move(h)));
}

struct BenchCase {
    std::string name;
    std::function<Eigen::MatrixXd(ExecPolicy)> build;
};

double time_best_of(const std::function<void()>& fn, int reps) {
    double best = 0.0;
    for (int i = 0; i < reps; ++i) {
        const double start = qhc::now_seconds();
        fn();
        const double elapsed = qhc::now_seconds() - start;
        if (i == 0 || elapsed < best) {
            best = elapsed;
        }
    }
    return best;
}

void run_case(const BenchCase& bench) {
    constexpr int reps = 3;
    Eigen::MatrixXd serial_out;
    Eigen::MatrixXd parallel_out;
    const double serial_s =
        time_best_of([&] { serial_out = bench.build(ExecPolicy::serial); }, reps);
    const double parallel_s =
        time_best_of([&] { parallel_out = bench.build(ExecPolicy::parallel); }, reps);
    const double delta = (serial_out - parallel_out).cwiseAbs().maxCoeff();
    std::printf("%-34s %10.4f ms %10.4f ms %7.2fx   %g\n", bench.name.c_str(),
                serial_s * 1e3, parallel_s * 1e3,
                parallel_s > 0.0 ? serial_s / parallel_s : 0.0, delta);
}

}  // namespace

int main() {
    std::printf("threads available to the parallel policy: %d\n\n", qhc::max_threads());
    std::printf("%-34s %13s %13s %9s   %s\n", "kernel", "serial", "parallel",
                "speedup", "max|delta|");

    const qhc::code::CodeSpec small = qhc::code::builtin_code("[[4,2,2]]");
    const auto small_graph = qhc::pauli::ConnectivityGraph::from_edges(
        4, {{0, 2}, {1, 3}, {0, 1}, {2, 3}});
    const qhc::pauli::OrthonormalBasis small_accessible = qhc::pauli::lie_closure_strings(
        4, qhc::pauli::graph_generators(small_graph));

    const qhc::code::CodeSpec large =
        qhc::code::CodeSpec::make(5, 1, 0, random_encoder(32, 11));
    const auto large_graph = qhc::pauli::ConnectivityGraph::from_edges(
        5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const qhc::pauli::OrthonormalBasis large_accessible = qhc::pauli::lie_closure_strings(
        5, qhc::pauli::graph_generators(large_graph));

    run_case({"inaccessibility map M, n=4", [&](ExecPolicy policy) {
                  return qhc::linmap::build_m(small, small_accessible, policy);
              }});
    run_case({"fused M.A columns, n=4", [&](ExecPolicy policy) {
                  return qhc::linmap::build_ma(small, small_accessible, policy);
              }});
    run_case({"stabilizer frame conjugation, n=4", [&](ExecPolicy policy) {
                  const auto basis = qhc::code::stabilizer_basis(small, policy);
                  Eigen::MatrixXd stacked(small.dim() * small.dim() - 1,
                                          Eigen::Index(basis.size()));
                  for (std::size_t j = 0; j < basis.size(); ++j) {
                      stacked.col(Eigen::Index(j)) =
                          qhc::pauli::vectorize(basis.element(j));
                  }
                  return stacked;
              }});
    run_case({"inaccessibility map M, n=5", [&](ExecPolicy policy) {
                  return qhc::linmap::build_m(large, large_accessible, policy);
              }});
    run_case({"fused M.A columns, n=5", [&](ExecPolicy policy) {
                  return qhc::linmap::build_ma(large, large_accessible, policy);
              }});
    return 0;
}

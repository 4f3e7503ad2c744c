#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qhc/run.hpp"
#include "qhc/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Hardware-aware encoded-Hamiltonian compiler"};
    app.set_version_flag("--version", std::string(qhc::tool_version));
    app.require_subcommand(1);

    qhc::io::RunOptions options;
    std::string mode;
    double lambda = 0.0;
    std::uint64_t seed = 0;

    CLI::App* compile = app.add_subcommand(
        "compile", "Compile a logical Hamiltonian onto hardware connectivity");
    compile->add_option("config", options.config_path, "Problem config JSON")
        ->required();
    compile->add_option("--out", options.out_path,
                        "Write the report here instead of stdout");
    CLI::Option* mode_opt =
        compile->add_option("--mode", mode, "Solver mode (overrides the config)")
            ->check(CLI::IsMember({"plain", "fast", "weighted", "regularized"}));
    CLI::Option* lambda_opt = compile->add_option(
        "--lambda", lambda, "Sparsity penalty for regularized mode");
    CLI::Option* seed_opt =
        compile->add_option("--seed", seed, "Random seed (overrides the config)");
    compile->add_flag("--sweep-permutations", options.sweep_permutations,
                      "Also re-solve under qubit relabelings of the graph");
    compile->add_option("--max-perms", options.max_perms,
                        "Permutation cap for the sweep (0: exhaustive for n <= 8)");
    compile->add_flag("--random-stabilizer", options.random_stabilizer,
                      "Replace the solve with a seeded random stabilizer correction");

    CLI11_PARSE(app, argc, argv);

    if (*mode_opt) {
        options.mode_override = mode;
    }
    if (*lambda_opt) {
        options.lambda_override = lambda;
    }
    if (*seed_opt) {
        options.seed_override = seed;
    }

    try {
        return qhc::io::run_compile(options, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qhc::io::exit_error;
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "qhc/kernels.hpp"

namespace qhc::io {

struct RunOptions {
    std::string config_path;
    /// Empty: report JSON goes to the output stream. Otherwise the report is
    /// written to this file and the stream gets a one-line summary.
    std::string out_path;
    std::optional<std::string> mode_override;
    std::optional<double> lambda_override;
    std::optional<std::uint64_t> seed_override;
    bool sweep_permutations = false;
    bool random_stabilizer = false;
    /// Permutation cap for the sweep; 0 means exhaustive for n <= 8 and 100
    /// samples above.
    int max_perms = 0;
    ExecPolicy policy = ExecPolicy::parallel;
};

inline constexpr int exit_accessible = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_inaccessible = 2;

/// Parses the config, dispatches the selected pipeline, verifies, and emits
/// the report. Returns the process exit code; all errors surface as
/// exceptions for the CLI wrapper to turn into exit_error.
int run_compile(const RunOptions& options, std::ostream& out);

}

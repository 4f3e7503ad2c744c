#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "qhc/solver.hpp"

namespace qhc::io {

/// A parsed and validated problem plus the run metadata that travels with
/// it into the report.
struct LoadedProblem {
    solver::CompilationProblem problem;
    std::uint64_t seed = 0;
    std::string config_hash;
};

/// Reads and validates a JSON problem description. Relative paths inside
/// the config (encoder or unitary files) resolve against the config's
/// directory. Builds the accessible basis from the connectivity block:
/// edge lists go through graph_generators and the Lie closure, explicit
/// generator labels through the closure directly.
LoadedProblem parse_problem(const std::string& path);

/// Same, from an already parsed document; base_dir resolves file references
/// and raw_bytes feeds the provenance hash.
LoadedProblem parse_problem_json(const nlohmann::json& doc, const std::string& base_dir,
                                 const std::string& raw_bytes);

/// Built-in logical target unitaries by name: CNOT, CZ, SWAP on two qubits;
/// X, Y, Z, H, S, T on one.
Eigen::MatrixXcd builtin_logical_unitary(const std::string& name);

/// FNV-1a 64-bit hash as a fixed-width hex string; report provenance.
std::string fnv1a_hex(const std::string& bytes);

}

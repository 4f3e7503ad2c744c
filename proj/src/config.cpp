#include "qhc/config.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qhc/closure.hpp"
#include "qhc/graph.hpp"

namespace qhc::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
    throw std::runtime_error("config: " + message);
}

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            fail("unknown field '" + item.key() + "' in " + where);
        }
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string resolve(const std::string& base_dir, const std::string& path) {
    const std::filesystem::path p(path);
    if (p.is_absolute() || base_dir.empty()) {
        return path;
    }
    return (std::filesystem::path(base_dir) / p).string();
}

/// Complex matrices are 2D arrays of [re, im] pairs.
Eigen::MatrixXcd parse_complex_matrix(const json& doc, const std::string& where) {
    if (!doc.is_array() || doc.empty()) {
        fail(where + ": expected a nonempty 2D array of [re, im] pairs");
    }
    const Eigen::Index rows = Eigen::Index(doc.size());
    const Eigen::Index cols = Eigen::Index(doc.at(0).size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const json& row = doc.at(std::size_t(r));
        if (!row.is_array() || Eigen::Index(row.size()) != cols) {
            fail(where + ": ragged rows");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            const json& cell = row.at(std::size_t(c));
            if (!cell.is_array() || cell.size() != 2) {
                fail(where + ": entries must be [re, im] pairs");
            }
            m(r, c) = std::complex<double>(cell.at(0).get<double>(),
                                           cell.at(1).get<double>());
        }
    }
    return m;
}

Eigen::MatrixXcd load_matrix_file(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        fail("matrix file '" + path + "': " + e.what());
    }
    if (doc.is_object()) {
        if (!doc.contains("matrix")) {
            fail("matrix file '" + path + "': missing 'matrix' field");
        }
        return parse_complex_matrix(doc.at("matrix"), path);
    }
    return parse_complex_matrix(doc, path);
}

code::CodeSpec parse_code(const json& doc, const std::string& base_dir) {
    if (!doc.is_object()) {
        fail("'code' must be an object");
    }
    require_keys(doc, "'code'", {"builtin", "encoder_file", "n", "k", "d"});
    const bool has_builtin = doc.contains("builtin");
    const bool has_file = doc.contains("encoder_file");
    if (has_builtin == has_file) {
        fail("'code' needs exactly one of 'builtin' or 'encoder_file'");
    }
    if (has_builtin) {
        return code::builtin_code(doc.at("builtin").get<std::string>());
    }
    if (!doc.contains("n") || !doc.contains("k")) {
        fail("'code' with 'encoder_file' needs 'n' and 'k'");
    }
    const int n = doc.at("n").get<int>();
    const int k = doc.at("k").get<int>();
    const int d = doc.contains("d") ? doc.at("d").get<int>() : 0;
    const std::string path = resolve(base_dir, doc.at("encoder_file").get<std::string>());
    return code::CodeSpec::make(n, k, d, load_matrix_file(path));
}

code::LogicalHamiltonian parse_logical(const json& doc, const std::string& base_dir,
                                       int k) {
    if (!doc.is_object()) {
        fail("'logical_hamiltonian' must be an object");
    }
    require_keys(doc, "'logical_hamiltonian'",
                 {"pauli_sum", "target_unitary", "target_unitary_file"});
    const int sources = int(doc.contains("pauli_sum")) +
                        int(doc.contains("target_unitary")) +
                        int(doc.contains("target_unitary_file"));
    if (sources != 1) {
        fail("'logical_hamiltonian' needs exactly one of 'pauli_sum', "
             "'target_unitary', 'target_unitary_file'");
    }
    if (doc.contains("pauli_sum")) {
        const json& terms = doc.at("pauli_sum");
        if (!terms.is_array() || terms.empty()) {
            fail("'pauli_sum' must be a nonempty array of [label, coefficient] pairs");
        }
        pauli::PauliSum sum(k);
        for (const json& term : terms) {
            if (!term.is_array() || term.size() != 2) {
                fail("'pauli_sum' entries must be [label, coefficient] pairs");
            }
            const std::string label = term.at(0).get<std::string>();
            const double coeff = term.at(1).get<double>();
            pauli::PauliString p = pauli::PauliString::from_label(label);
            if (p.n() != k) {
                fail("'pauli_sum' label '" + label + "' is not on " +
                     std::to_string(k) + " qubits");
            }
            sum.add(p, coeff);
        }
        return code::LogicalHamiltonian::make(k, sum.to_skew());
    }
    Eigen::MatrixXcd target;
    if (doc.contains("target_unitary")) {
        target = builtin_logical_unitary(doc.at("target_unitary").get<std::string>());
    } else {
        target = load_matrix_file(
            resolve(base_dir, doc.at("target_unitary_file").get<std::string>()));
    }
    if (target.rows() != (Eigen::Index(1) << k)) {
        fail("target unitary dimension does not match k = " + std::to_string(k));
    }
    return code::LogicalHamiltonian::make(k, code::traceless_log(target));
}

/// Returns the accessible basis and, for edge lists, the graph itself so
/// the permutation sweep can relabel it later.
std::pair<pauli::OrthonormalBasis, std::optional<pauli::ConnectivityGraph>>
parse_connectivity(const json* doc, int n) {
    if (doc == nullptr) {
        return {pauli::OrthonormalBasis::from_pauli_strings(n, {}), std::nullopt};
    }
    if (!doc->is_object()) {
        fail("'connectivity' must be an object");
    }
    require_keys(*doc, "'connectivity'", {"edges", "generators"});
    const bool has_edges = doc->contains("edges");
    const bool has_generators = doc->contains("generators");
    if (has_edges && has_generators) {
        fail("'connectivity' takes 'edges' or 'generators', not both");
    }
    if (has_generators) {
        std::vector<pauli::PauliString> generators;
        for (const json& label : doc->at("generators")) {
            pauli::PauliString p = pauli::PauliString::from_label(label.get<std::string>());
            if (p.n() != n) {
                fail("generator '" + label.get<std::string>() + "' is not on " +
                     std::to_string(n) + " qubits");
            }
            generators.push_back(std::move(p));
        }
        return {pauli::lie_closure_strings(n, generators), std::nullopt};
    }
    std::vector<std::pair<int, int>> edges;
    if (has_edges) {
        for (const json& edge : doc->at("edges")) {
            if (!edge.is_array() || edge.size() != 2) {
                fail("'edges' entries must be [i, j] pairs");
            }
            edges.emplace_back(edge.at(0).get<int>(), edge.at(1).get<int>());
        }
    }
    pauli::ConnectivityGraph graph = pauli::ConnectivityGraph::from_edges(n, std::move(edges));
    const pauli::OrthonormalBasis accessible =
        pauli::lie_closure_strings(n, pauli::graph_generators(graph));
    return {accessible, std::move(graph)};
}

solver::SolveMode parse_mode(const std::string& name) {
    if (name == "plain") return solver::SolveMode::plain;
    if (name == "fast") return solver::SolveMode::fast;
    if (name == "weighted") return solver::SolveMode::weighted;
    if (name == "regularized") return solver::SolveMode::regularized;
    fail("unknown mode '" + name + "'");
}

solver::WeightMap parse_weights(const json& doc, int n) {
    if (!doc.is_object()) {
        fail("'weights' must be an object");
    }
    require_keys(doc, "'weights'", {"default", "overrides"});
    solver::WeightMap weights;
    if (doc.contains("default")) {
        weights.default_weight = doc.at("default").get<double>();
    }
    if (doc.contains("overrides")) {
        for (const auto& item : doc.at("overrides").items()) {
            pauli::PauliString p = pauli::PauliString::from_label(item.key());
            if (p.n() != n) {
                fail("weight override '" + item.key() + "' is not on " +
                     std::to_string(n) + " qubits");
            }
            weights.overrides[p.index()] = item.value().get<double>();
        }
    }
    return weights;
}

}  // namespace

LoadedProblem parse_problem(const std::string& path) {
    const std::string raw = read_file(path);
    json doc;
    try {
        doc = json::parse(raw);
    } catch (const json::parse_error& e) {
        fail(std::string(e.what()));
    }
    const std::string base_dir = std::filesystem::path(path).parent_path().string();
    return parse_problem_json(doc, base_dir, raw);
}

LoadedProblem parse_problem_json(const nlohmann::json& doc, const std::string& base_dir,
                                 const std::string& raw_bytes) try {
    if (!doc.is_object()) {
        fail("top level must be an object");
    }
    require_keys(doc, "the top level",
                 {"code", "logical_hamiltonian", "connectivity", "mode", "lambda",
                  "weights", "seed", "tolerances"});
    if (!doc.contains("code") || !doc.contains("logical_hamiltonian")) {
        fail("'code' and 'logical_hamiltonian' are required");
    }

    LoadedProblem loaded{
        solver::CompilationProblem{
            parse_code(doc.at("code"), base_dir),
            code::LogicalHamiltonian::make(1, pauli::SkewHermitian::zero(2)),
            pauli::OrthonormalBasis::from_pauli_strings(1, {}),
            solver::SolveMode::plain,
            0.0,
            solver::WeightMap{},
            1e-10,
            1e-8,
            ExecPolicy::serial,
            std::nullopt,
        },
        0,
        fnv1a_hex(raw_bytes),
    };
    solver::CompilationProblem& p = loaded.problem;

    p.h_logical = parse_logical(doc.at("logical_hamiltonian"), base_dir, p.code.k);
    auto [accessible, graph] = parse_connectivity(
        doc.contains("connectivity") ? &doc.at("connectivity") : nullptr, p.code.n);
    p.accessible = std::move(accessible);
    p.connectivity = std::move(graph);

    if (doc.contains("mode")) {
        p.mode = parse_mode(doc.at("mode").get<std::string>());
    }
    if (doc.contains("lambda")) {
        p.lambda = doc.at("lambda").get<double>();
    }
    if (doc.contains("weights")) {
        p.weights = parse_weights(doc.at("weights"), p.code.n);
    }
    if (doc.contains("seed")) {
        loaded.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (doc.contains("tolerances")) {
        const json& tol = doc.at("tolerances");
        require_keys(tol, "'tolerances'", {"svd", "accessibility"});
        if (tol.contains("svd")) {
            p.svd_tol = tol.at("svd").get<double>();
        }
        if (tol.contains("accessibility")) {
            p.accessibility_tol = tol.at("accessibility").get<double>();
        }
    }
    p.validate();
    return loaded;
} catch (const nlohmann::json::exception& e) {
    // Type and access errors from field extraction; uniform config prefix.
    fail(e.what());
} catch (const std::invalid_argument& e) {
    // Validation errors thrown by the structures being assembled.
    fail(e.what());
}

Eigen::MatrixXcd builtin_logical_unitary(const std::string& name) {
    const std::complex<double> i(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    if (name == "CNOT") {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
        m(2, 2) = 0;
        m(3, 3) = 0;
        m(2, 3) = 1;
        m(3, 2) = 1;
        return m;
    }
    if (name == "CZ") {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
        m(3, 3) = -1;
        return m;
    }
    if (name == "SWAP") {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(4, 4);
        m(1, 1) = 0;
        m(2, 2) = 0;
        m(1, 2) = 1;
        m(2, 1) = 1;
        return m;
    }
    if (name == "X") {
        Eigen::MatrixXcd m(2, 2);
        m << 0, 1, 1, 0;
        return m;
    }
    if (name == "Y") {
        Eigen::MatrixXcd m(2, 2);
        m << 0, -i, i, 0;
        return m;
    }
    if (name == "Z") {
        Eigen::MatrixXcd m(2, 2);
        m << 1, 0, 0, -1;
        return m;
    }
    if (name == "H") {
        Eigen::MatrixXcd m(2, 2);
        m << s, s, s, -s;
        return m;
    }
    if (name == "S") {
        Eigen::MatrixXcd m(2, 2);
        m << 1, 0, 0, i;
        return m;
    }
    if (name == "T") {
        Eigen::MatrixXcd m(2, 2);
        m << 1, 0, 0, std::exp(i * (3.14159265358979323846 / 4.0));
        return m;
    }
    fail("unknown target unitary '" + name +
         "' (available: CNOT, CZ, SWAP, X, Y, Z, H, S, T)");
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (const unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(hash));
    return std::string(buffer);
}

}

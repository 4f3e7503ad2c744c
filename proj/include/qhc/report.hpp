#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qhc/config.hpp"
#include "qhc/sweep.hpp"
#include "qhc/verify.hpp"

namespace qhc::io {

struct ReportTerm {
    std::string label;
    double coefficient = 0.0;
};

/// The serialized outcome of a compile run. Re-parsing an emitted report
/// reproduces every field; two runs of the same config and seed agree on
/// everything outside the timing and tool blocks.
struct Report {
    std::string tool_name;
    std::string tool_version;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::string mode;
    double lambda = 0.0;
    bool random_stabilizer = false;

    double residual = 0.0;
    bool accessible = false;
    std::size_t term_count = 0;
    std::vector<ReportTerm> pauli_terms;

    verify::VerificationReport verification;

    double solve_seconds = 0.0;
    double total_seconds = 0.0;

    std::optional<solver::AdmmInfo> admm;
    std::optional<std::vector<SweepEntry>> sweep;
};

/// Nearest double with the given number of significant decimal digits.
double round_significant(double value, int digits);

/// Coefficient cutoff for emitted Pauli terms.
inline constexpr double report_term_cutoff = 1e-8;
/// Significant digits for emitted coefficients.
inline constexpr int report_coefficient_digits = 15;

/// Fills the result, term list (cutoff, rounded coefficients) and
/// verification sections from a solve outcome.
Report build_report(const LoadedProblem& loaded, const std::string& mode_name,
                    const solver::CompilationResult& result,
                    const verify::VerificationReport& verification);

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& doc);

void emit_report(const Report& report, std::ostream& out);
void emit_report(const Report& report, const std::string& path);
Report read_report(const std::string& path);

}

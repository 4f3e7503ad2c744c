#include "qhc/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "qhc/version.hpp"

namespace qhc::io {

namespace {

using nlohmann::json;

json verification_to_json(const verify::VerificationReport& v) {
    return json{
        {"codespace_error", v.codespace_error},
        {"phase_free_distance", v.phase_free_distance},
        {"unitary_distance", v.unitary_distance},
        {"bound_value", v.bound_value},
        {"bound_satisfied", v.bound_satisfied},
        {"norm_ordering_ok", v.norm_ordering_ok},
    };
}

verify::VerificationReport verification_from_json(const json& doc) {
    verify::VerificationReport v;
    v.codespace_error = doc.at("codespace_error").get<double>();
    v.phase_free_distance = doc.at("phase_free_distance").get<double>();
    v.unitary_distance = doc.at("unitary_distance").get<double>();
    v.bound_value = doc.at("bound_value").get<double>();
    v.bound_satisfied = doc.at("bound_satisfied").get<bool>();
    v.norm_ordering_ok = doc.at("norm_ordering_ok").get<bool>();
    return v;
}

}  // namespace

double round_significant(double value, int digits) {
    if (value == 0.0 || !std::isfinite(value)) {
        return value;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    return std::strtod(buffer, nullptr);
}

Report build_report(const LoadedProblem& loaded, const std::string& mode_name,
                    const solver::CompilationResult& result,
                    const verify::VerificationReport& verification) {
    Report report;
    report.tool_name = tool_name;
    report.tool_version = tool_version;
    report.config_hash = loaded.config_hash;
    report.seed = loaded.seed;
    report.mode = mode_name;
    report.lambda = loaded.problem.lambda;
    report.residual = result.residual;
    report.accessible = result.accessible;
    for (const auto& [string, coefficient] : result.pauli_terms.terms(report_term_cutoff)) {
        report.pauli_terms.push_back(ReportTerm{
            string.label(),
            round_significant(coefficient, report_coefficient_digits),
        });
    }
    report.term_count = report.pauli_terms.size();
    report.verification = verification;
    report.solve_seconds = result.solve_seconds;
    report.admm = result.admm;
    return report;
}

json report_to_json(const Report& report) {
    json terms = json::array();
    for (const ReportTerm& term : report.pauli_terms) {
        terms.push_back(json{{"label", term.label}, {"coefficient", term.coefficient}});
    }
    json doc{
        {"tool", {{"name", report.tool_name}, {"version", report.tool_version}}},
        {"provenance",
         {{"config_hash", report.config_hash},
          {"seed", report.seed},
          {"mode", report.mode},
          {"lambda", report.lambda},
          {"random_stabilizer", report.random_stabilizer}}},
        {"result",
         {{"residual", report.residual},
          {"accessible", report.accessible},
          {"term_count", report.term_count},
          {"pauli_terms", std::move(terms)}}},
        {"verification", verification_to_json(report.verification)},
        {"timing",
         {{"solve_seconds", report.solve_seconds},
          {"total_seconds", report.total_seconds}}},
    };
    if (report.admm.has_value()) {
        doc["admm"] = json{
            {"iterations", report.admm->iterations},
            {"converged", report.admm->converged},
            {"primal_residual", report.admm->primal_residual},
            {"dual_residual", report.admm->dual_residual},
        };
    }
    if (report.sweep.has_value()) {
        json entries = json::array();
        for (const SweepEntry& entry : *report.sweep) {
            entries.push_back(json{
                {"permutation", entry.permutation},
                {"residual", entry.residual},
                {"accessible", entry.accessible},
            });
        }
        doc["sweep"] = std::move(entries);
    }
    return doc;
}

Report report_from_json(const json& doc) {
    Report report;
    report.tool_name = doc.at("tool").at("name").get<std::string>();
    report.tool_version = doc.at("tool").at("version").get<std::string>();
    const json& prov = doc.at("provenance");
    report.config_hash = prov.at("config_hash").get<std::string>();
    report.seed = prov.at("seed").get<std::uint64_t>();
    report.mode = prov.at("mode").get<std::string>();
    report.lambda = prov.at("lambda").get<double>();
    report.random_stabilizer = prov.at("random_stabilizer").get<bool>();
    const json& result = doc.at("result");
    report.residual = result.at("residual").get<double>();
    report.accessible = result.at("accessible").get<bool>();
    report.term_count = result.at("term_count").get<std::size_t>();
    for (const json& term : result.at("pauli_terms")) {
        report.pauli_terms.push_back(ReportTerm{
            term.at("label").get<std::string>(),
            term.at("coefficient").get<double>(),
        });
    }
    report.verification = verification_from_json(doc.at("verification"));
    report.solve_seconds = doc.at("timing").at("solve_seconds").get<double>();
    report.total_seconds = doc.at("timing").at("total_seconds").get<double>();
    if (doc.contains("admm")) {
        solver::AdmmInfo info;
        info.iterations = doc.at("admm").at("iterations").get<int>();
        info.converged = doc.at("admm").at("converged").get<bool>();
        info.primal_residual = doc.at("admm").at("primal_residual").get<double>();
        info.dual_residual = doc.at("admm").at("dual_residual").get<double>();
        report.admm = info;
    }
    if (doc.contains("sweep")) {
        std::vector<SweepEntry> entries;
        for (const json& entry : doc.at("sweep")) {
            entries.push_back(SweepEntry{
                entry.at("permutation").get<std::vector<int>>(),
                entry.at("residual").get<double>(),
                entry.at("accessible").get<bool>(),
            });
        }
        report.sweep = std::move(entries);
    }
    return report;
}

void emit_report(const Report& report, std::ostream& out) {
    out << report_to_json(report).dump(2) << "\n";
}

void emit_report(const Report& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("report: cannot open '" + path + "' for writing");
    }
    emit_report(report, out);
    if (!out) {
        throw std::runtime_error("report: write to '" + path + "' failed");
    }
}

Report read_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("report: cannot open '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("report: " + std::string(e.what()));
    }
    return report_from_json(doc);
}

}

// Machine-readable output. The JSON and CSV emitters are hand-rolled on
// purpose: the output contract is byte-determinism with a fixed key order and
// fixed float formatting (12 significant digits, 9 for noise magnitudes),
// which is simplest to guarantee by writing the bytes ourselves. The nlohmann
// parser is pulled in only to read reports back (round-trip checks).
//
// None of the strings we emit (bitstrings, enum tags, algorithm names) can
// contain characters that need JSON escaping, so quoting is plain.
#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

#include <json.hpp>

#include "iqc/enumerate.hpp"
#include "iqc/noise.hpp"

namespace iqc {

// v rendered with a fixed number of significant digits, trailing zeros kept.
inline std::string format_sig(double v, int digits) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%#.*g", digits, v);
    return std::string(buf);
}

inline std::string fmt_probability(double v) { return format_sig(v, 12); }
inline std::string fmt_magnitude(double v) { return format_sig(v, 9); }

namespace detail {

inline std::string quoted(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out += '"';
    out += s;
    out += '"';
    return out;
}

inline const char* bool_word(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// The enumeration/run report schema. Key order is fixed; measured is null on
// rounds that failed post-selection.
inline std::string emit_report_json(const EnumerationReport& report, std::string_view algorithm,
                                    int n_qubits, std::uint64_t seed) {
    std::string out;
    out += "{\n";
    out += "  \"algorithm\": " + detail::quoted(algorithm) + ",\n";
    out += "  \"n_qubits\": " + std::to_string(n_qubits) + ",\n";
    out += "  \"seed\": " + std::to_string(seed) + ",\n";
    out += "  \"found\": [";
    bool first = true;
    for (const BasisState& s : report.found.states()) {
        if (!first) out += ", ";
        out += detail::quoted(s.str());
        first = false;
    }
    out += "],\n";
    out += "  \"rounds\": [";
    first = true;
    for (const RoundRecord& r : report.rounds) {
        out += first ? "\n" : ",\n";
        out += "    {\"round\": " + std::to_string(r.round);
        out += ", \"success_probability\": " + fmt_probability(r.success_probability);
        out += ", \"post_selected\": ";
        out += detail::bool_word(r.post_selected);
        out += ", \"measured\": ";
        out += r.measured ? detail::quoted(r.measured->str()) : "null";
        out += ", \"verified\": ";
        out += detail::bool_word(r.verified);
        out += "}";
        first = false;
    }
    out += first ? "],\n" : "\n  ],\n";
    out += "  \"termination\": " + detail::quoted(to_string(report.termination)) + "\n";
    out += "}\n";
    return out;
}

// Tabular rendering of the same report: one row per round.
inline std::string emit_rounds_csv(const EnumerationReport& report) {
    std::string out = "round,success_probability,post_selected,measured,verified\n";
    for (const RoundRecord& r : report.rounds) {
        out += std::to_string(r.round);
        out += ',';
        out += fmt_probability(r.success_probability);
        out += ',';
        out += detail::bool_word(r.post_selected);
        out += ',';
        if (r.measured) out += r.measured->str();
        out += ',';
        out += detail::bool_word(r.verified);
        out += '\n';
    }
    return out;
}

inline std::string emit_sweep_csv(const SweepResult& result) {
    std::string out = "model,magnitude,trials,post_rate,hit_rate\n";
    for (const SweepPoint& pt : result.points) {
        out += to_string(pt.noise.model);
        out += ',';
        out += fmt_magnitude(pt.noise.magnitude);
        out += ',';
        out += std::to_string(pt.trials);
        out += ',';
        out += fmt_probability(pt.post_rate);
        out += ',';
        out += fmt_probability(pt.hit_rate);
        out += '\n';
    }
    return out;
}

inline std::string emit_sweep_json(const SweepResult& result, int n_qubits, std::uint64_t seed,
                                   NoisePoint point) {
    std::string out;
    out += "{\n";
    out += "  \"algorithm\": \"sweep\",\n";
    out += "  \"n_qubits\": " + std::to_string(n_qubits) + ",\n";
    out += "  \"seed\": " + std::to_string(seed) + ",\n";
    out += "  \"noise_point\": " + detail::quoted(to_string(point)) + ",\n";
    out += "  \"points\": [";
    bool first = true;
    for (const SweepPoint& pt : result.points) {
        out += first ? "\n" : ",\n";
        out += "    {\"model\": " + detail::quoted(to_string(pt.noise.model));
        out += ", \"magnitude\": " + fmt_magnitude(pt.noise.magnitude);
        out += ", \"trials\": " + std::to_string(pt.trials);
        out += ", \"post_rate\": " + fmt_probability(pt.post_rate);
        out += ", \"hit_rate\": " + fmt_probability(pt.hit_rate);
        out += "}";
        first = false;
    }
    out += first ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

// Summary of a fixed-iteration Grover run sampled over some shots.
struct GroverSummary {
    std::uint64_t iterations = 0;
    double success_probability = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t hits = 0;
};

inline std::string emit_grover_json(const GroverSummary& g, int n_qubits, std::uint64_t seed) {
    const double hit_rate =
        g.shots == 0 ? 0.0 : static_cast<double>(g.hits) / static_cast<double>(g.shots);
    std::string out;
    out += "{\n";
    out += "  \"algorithm\": \"grover\",\n";
    out += "  \"n_qubits\": " + std::to_string(n_qubits) + ",\n";
    out += "  \"seed\": " + std::to_string(seed) + ",\n";
    out += "  \"iterations\": " + std::to_string(g.iterations) + ",\n";
    out += "  \"success_probability\": " + fmt_probability(g.success_probability) + ",\n";
    out += "  \"shots\": " + std::to_string(g.shots) + ",\n";
    out += "  \"hits\": " + std::to_string(g.hits) + ",\n";
    out += "  \"hit_rate\": " + fmt_probability(hit_rate) + "\n";
    out += "}\n";
    return out;
}

inline std::string emit_grover_csv(const GroverSummary& g) {
    const double hit_rate =
        g.shots == 0 ? 0.0 : static_cast<double>(g.hits) / static_cast<double>(g.shots);
    std::string out = "iterations,success_probability,shots,hits,hit_rate\n";
    out += std::to_string(g.iterations);
    out += ',';
    out += fmt_probability(g.success_probability);
    out += ',';
    out += std::to_string(g.shots);
    out += ',';
    out += std::to_string(g.hits);
    out += ',';
    out += fmt_probability(hit_rate);
    out += '\n';
    return out;
}

// --- reading reports back -------------------------------------------------

struct ReportEnvelope {
    std::string algorithm;
    int n_qubits = 0;
    std::uint64_t seed = 0;
    EnumerationReport report;
};

inline Termination termination_from_string(std::string_view s) {
    if (s == "ResidualZero") return Termination::ResidualZero;
    if (s == "FailureStreak") return Termination::FailureStreak;
    if (s == "RoundBudget") return Termination::RoundBudget;
    throw std::invalid_argument("termination_from_string: unknown tag '" + std::string(s) + "'");
}

// Inverse of emit_report_json. Throws (nlohmann or std exceptions) on
// malformed input; meant for tooling and round-trip checks, not user input.
inline ReportEnvelope parse_report_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ReportEnvelope env;
    env.algorithm = j.at("algorithm").get<std::string>();
    env.n_qubits = j.at("n_qubits").get<int>();
    env.seed = j.at("seed").get<std::uint64_t>();
    env.report.found = SolutionSet(env.n_qubits);
    for (const auto& s : j.at("found"))
        env.report.found.insert(BasisState::from_string(s.get<std::string>()));
    for (const auto& r : j.at("rounds")) {
        RoundRecord rec;
        rec.round = r.at("round").get<std::uint64_t>();
        rec.success_probability = r.at("success_probability").get<double>();
        rec.post_selected = r.at("post_selected").get<bool>();
        if (!r.at("measured").is_null())
            rec.measured = BasisState::from_string(r.at("measured").get<std::string>());
        rec.verified = r.at("verified").get<bool>();
        env.report.rounds.push_back(rec);
    }
    env.report.termination = termination_from_string(j.at("termination").get<std::string>());
    return env;
}

}  // namespace iqc

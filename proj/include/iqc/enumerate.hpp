// Iterative all-solutions search: run the interferometer, classically verify
// whatever was measured, exclude confirmed solutions, repeat until the
// positive branch is exhausted (or a budget runs out).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iqc/interference.hpp"
#include "iqc/oracle.hpp"

namespace iqc {

// Analytic residual below which the positive branch counts as empty. On a
// uniform spread the true residual is an integer multiple of 1/2^n, so with
// n capped well below 40 this threshold separates "exactly zero" from
// "smallest possible nonzero" with orders of magnitude to spare.
inline constexpr double kResidualThreshold = 1e-12;

enum class Termination {
    ResidualZero,   // analytic next-round probability vanished (exact mode)
    FailureStreak,  // K consecutive post-selection failures (sampled mode)
    RoundBudget,    // max_rounds exhausted
};

inline const char* to_string(Termination t) {
    switch (t) {
        case Termination::ResidualZero: return "ResidualZero";
        case Termination::FailureStreak: return "FailureStreak";
        case Termination::RoundBudget: return "RoundBudget";
    }
    return "?";
}

struct EnumerationConfig {
    std::uint64_t max_rounds = 10000;
    std::uint64_t failure_streak_limit = 20;  // only consulted when exact_mode is off
    bool exact_mode = true;
    std::uint64_t seed = 0;
};

// What one round did: the analytic success probability it faced, whether
// post-selection succeeded, what was measured, and whether that verified.
struct RoundRecord {
    std::uint64_t round = 0;  // 1-based
    double success_probability = 0.0;
    bool post_selected = false;
    std::optional<BasisState> measured;
    bool verified = false;
};

struct EnumerationReport {
    SolutionSet found;
    std::vector<RoundRecord> rounds;
    Termination termination = Termination::RoundBudget;
};

// Classical confirmation of a measured candidate. Deliberately ignores
// exclusions: a previously-found solution re-emerging is still a true
// solution — spotting the repeat is the driver's job.
inline bool verify_candidate(const Oracle& o, const BasisState& x) {
    return o.predicate(x);
}

// Post-selection probability the next round would face: the weight of the
// positively-marked set under the uniform spread, i.e. |positive| / 2^n.
// Computed by counting, so an exhausted oracle yields exactly 0.0.
inline double round_success_probability(const Oracle& o) {
    const std::uint64_t dim = std::uint64_t{1} << o.n_vars();
    std::uint64_t positive = 0;
    for (std::uint64_t x = 0; x < dim; ++x)
        if (!o.marked_negative(x)) ++positive;
    return static_cast<double>(positive) / static_cast<double>(dim);
}

// The full search loop. Every report carries at least one round: even an
// oracle with no solutions gets its one demonstrative round before the
// residual check declares the branch empty.
inline EnumerationReport enumerate_solutions(const Oracle& o, const EnumerationConfig& cfg,
                                             int max_qubits = kDefaultMaxQubits) {
    if (cfg.max_rounds < 1)
        throw std::invalid_argument("enumerate_solutions: max_rounds must be positive");
    if (cfg.failure_streak_limit < 1)
        throw std::invalid_argument("enumerate_solutions: failure_streak_limit must be positive");

    Rng rng = make_rng(cfg.seed);
    Oracle current = o;
    EnumerationReport report;
    report.found = SolutionSet(o.n_vars());
    std::uint64_t streak = 0;

    for (std::uint64_t round = 1; round <= cfg.max_rounds; ++round) {
        const InterferenceOutcome out = interfere_and_measure(current, rng, max_qubits);

        RoundRecord rec;
        rec.round = round;
        rec.success_probability = out.success_probability;
        rec.post_selected = out.post_selected;
        rec.measured = out.measured;
        rec.verified = out.measured.has_value() && verify_candidate(o, *out.measured);
        report.rounds.push_back(rec);

        if (rec.verified && !report.found.contains(*out.measured)) {
            report.found.insert(*out.measured);
            current = exclude(current, *out.measured);
        }

        if (cfg.exact_mode) {
            if (round_success_probability(current) < kResidualThreshold) {
                report.termination = Termination::ResidualZero;
                return report;
            }
        } else {
            streak = out.post_selected ? 0 : streak + 1;
            if (streak >= cfg.failure_streak_limit) {
                report.termination = Termination::FailureStreak;
                return report;
            }
        }
    }
    report.termination = Termination::RoundBudget;
    return report;
}

}  // namespace iqc

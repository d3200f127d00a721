#include "iqc/serialize.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>

#include "iqc/enumerate.hpp"
#include "iqc/oracle.hpp"
#include "iqc/random.hpp"

namespace {

using iqc::BasisState;
using iqc::EnumerationReport;
using iqc::GroverSummary;
using iqc::RoundRecord;
using iqc::SweepPoint;
using iqc::SweepResult;
using iqc::Termination;

// A small report covering every field shape: a verified hit, a second hit,
// and a failed round with no measurement.
EnumerationReport sample_report() {
    EnumerationReport report;
    report.found.insert(BasisState::from_string("001"));
    report.found.insert(BasisState::from_string("011"));
    report.rounds.push_back({1, 0.25, true, BasisState::from_string("001"), true});
    report.rounds.push_back({2, 0.125, true, BasisState::from_string("011"), true});
    report.rounds.push_back({3, 0.0, false, std::nullopt, false});
    report.termination = Termination::ResidualZero;
    return report;
}

TEST(FormatSigTest, FixedSignificantDigits) {
    EXPECT_EQ(iqc::format_sig(0.25, 12), "0.250000000000");
    EXPECT_EQ(iqc::format_sig(0.125, 12), "0.125000000000");
    EXPECT_EQ(iqc::format_sig(0.0, 12), "0.00000000000");
    EXPECT_EQ(iqc::format_sig(1.0, 12), "1.00000000000");
    EXPECT_EQ(iqc::format_sig(1.0 / 3.0, 12), "0.333333333333");
    EXPECT_EQ(iqc::format_sig(0.001, 9), "0.00100000000");
    EXPECT_EQ(iqc::format_sig(0.5, 9), "0.500000000");
}

TEST(FormatSigTest, ProbabilityAndMagnitudeWrappers) {
    EXPECT_EQ(iqc::fmt_probability(0.25), "0.250000000000");
    EXPECT_EQ(iqc::fmt_magnitude(0.001), "0.00100000000");
}

TEST(ReportJsonTest, MatchesGoldenBytes) {
    const std::string expected =
        "{\n"
        "  \"algorithm\": \"enumerate\",\n"
        "  \"n_qubits\": 3,\n"
        "  \"seed\": 42,\n"
        "  \"found\": [\"001\", \"011\"],\n"
        "  \"rounds\": [\n"
        "    {\"round\": 1, \"success_probability\": 0.250000000000, \"post_selected\": true, "
        "\"measured\": \"001\", \"verified\": true},\n"
        "    {\"round\": 2, \"success_probability\": 0.125000000000, \"post_selected\": true, "
        "\"measured\": \"011\", \"verified\": true},\n"
        "    {\"round\": 3, \"success_probability\": 0.00000000000, \"post_selected\": false, "
        "\"measured\": null, \"verified\": false}\n"
        "  ],\n"
        "  \"termination\": \"ResidualZero\"\n"
        "}\n";
    EXPECT_EQ(iqc::emit_report_json(sample_report(), "enumerate", 3, 42), expected);
}

TEST(ReportJsonTest, EmptyReportUsesCompactBrackets) {
    EnumerationReport report;
    report.termination = Termination::RoundBudget;
    const std::string expected =
        "{\n"
        "  \"algorithm\": \"run\",\n"
        "  \"n_qubits\": 2,\n"
        "  \"seed\": 0,\n"
        "  \"found\": [],\n"
        "  \"rounds\": [],\n"
        "  \"termination\": \"RoundBudget\"\n"
        "}\n";
    EXPECT_EQ(iqc::emit_report_json(report, "run", 2, 0), expected);
}

TEST(ReportJsonTest, RoundTripPreservesEveryField) {
    const EnumerationReport report = sample_report();
    const std::string text = iqc::emit_report_json(report, "enumerate", 3, 42);
    const iqc::ReportEnvelope env = iqc::parse_report_json(text);

    EXPECT_EQ(env.algorithm, "enumerate");
    EXPECT_EQ(env.n_qubits, 3);
    EXPECT_EQ(env.seed, 42u);
    EXPECT_EQ(env.report.found, report.found);
    EXPECT_EQ(env.report.termination, report.termination);
    ASSERT_EQ(env.report.rounds.size(), report.rounds.size());
    for (std::size_t i = 0; i < report.rounds.size(); ++i) {
        const RoundRecord& a = report.rounds[i];
        const RoundRecord& b = env.report.rounds[i];
        EXPECT_EQ(b.round, a.round);
        EXPECT_EQ(b.success_probability, a.success_probability);  // dyadic: exact
        EXPECT_EQ(b.post_selected, a.post_selected);
        EXPECT_EQ(b.measured, a.measured);
        EXPECT_EQ(b.verified, a.verified);
    }
}

TEST(ReportJsonTest, EmitParseEmitIsAFixedPoint) {
    // Probabilities that do not fit 12 digits stabilize after one round trip.
    EnumerationReport report;
    report.found.insert(BasisState::from_string("10"));
    report.rounds.push_back({1, 1.0 / 3.0, true, BasisState::from_string("10"), true});
    report.rounds.push_back({2, 2.0 / 7.0, false, std::nullopt, false});
    report.termination = Termination::FailureStreak;

    const std::string once = iqc::emit_report_json(report, "enumerate", 2, 9);
    const iqc::ReportEnvelope env = iqc::parse_report_json(once);
    const std::string twice = iqc::emit_report_json(env.report, env.algorithm, env.n_qubits, env.seed);
    EXPECT_EQ(once, twice);
}

TEST(ReportJsonTest, ParseRejectsMalformedInput) {
    EXPECT_THROW(iqc::parse_report_json("{"), std::exception);
    EXPECT_THROW(iqc::parse_report_json("{}"), std::exception);
    EXPECT_THROW(iqc::parse_report_json(
                     "{\"algorithm\": \"x\", \"n_qubits\": 1, \"seed\": 0, \"found\": [], "
                     "\"rounds\": [], \"termination\": \"NotATag\"}"),
                 std::invalid_argument);
}

TEST(RoundsCsvTest, MatchesGoldenBytes) {
    const std::string expected =
        "round,success_probability,post_selected,measured,verified\n"
        "1,0.250000000000,true,001,true\n"
        "2,0.125000000000,true,011,true\n"
        "3,0.00000000000,false,,false\n";
    EXPECT_EQ(iqc::emit_rounds_csv(sample_report()), expected);
}

TEST(RoundsCsvTest, HeaderOnlyForEmptyReport) {
    EXPECT_EQ(iqc::emit_rounds_csv(EnumerationReport{}),
              "round,success_probability,post_selected,measured,verified\n");
}

SweepResult sample_sweep() {
    SweepResult result;
    result.points.push_back({{iqc::NoiseModel::Amplitude, 0.001}, 100, 0.25, 1.0});
    result.points.push_back({{iqc::NoiseModel::BitFlip, 0.5}, 100, 0.26, 0.27});
    return result;
}

TEST(SweepCsvTest, MatchesGoldenBytes) {
    const std::string expected =
        "model,magnitude,trials,post_rate,hit_rate\n"
        "amplitude,0.00100000000,100,0.250000000000,1.00000000000\n"
        "bitflip,0.500000000,100,0.260000000000,0.270000000000\n";
    EXPECT_EQ(iqc::emit_sweep_csv(sample_sweep()), expected);
}

TEST(SweepJsonTest, MatchesGoldenBytes) {
    const std::string expected =
        "{\n"
        "  \"algorithm\": \"sweep\",\n"
        "  \"n_qubits\": 3,\n"
        "  \"seed\": 7,\n"
        "  \"noise_point\": \"after-oracle\",\n"
        "  \"points\": [\n"
        "    {\"model\": \"amplitude\", \"magnitude\": 0.00100000000, \"trials\": 100, "
        "\"post_rate\": 0.250000000000, \"hit_rate\": 1.00000000000},\n"
        "    {\"model\": \"bitflip\", \"magnitude\": 0.500000000, \"trials\": 100, "
        "\"post_rate\": 0.260000000000, \"hit_rate\": 0.270000000000}\n"
        "  ]\n"
        "}\n";
    EXPECT_EQ(iqc::emit_sweep_json(sample_sweep(), 3, 7, iqc::NoisePoint::AfterOracle), expected);
}

TEST(SweepJsonTest, EmptySweepUsesCompactBrackets) {
    const std::string text = iqc::emit_sweep_json(SweepResult{}, 1, 0, iqc::NoisePoint::AfterSpread);
    EXPECT_NE(text.find("\"points\": []\n"), std::string::npos);
    EXPECT_NE(text.find("\"noise_point\": \"after-spread\""), std::string::npos);
}

TEST(GroverEmitTest, JsonMatchesGoldenBytes) {
    const GroverSummary g{2, 0.9453125, 1000, 945};
    const std::string expected =
        "{\n"
        "  \"algorithm\": \"grover\",\n"
        "  \"n_qubits\": 3,\n"
        "  \"seed\": 7,\n"
        "  \"iterations\": 2,\n"
        "  \"success_probability\": 0.945312500000,\n"
        "  \"shots\": 1000,\n"
        "  \"hits\": 945,\n"
        "  \"hit_rate\": 0.945000000000\n"
        "}\n";
    EXPECT_EQ(iqc::emit_grover_json(g, 3, 7), expected);
}

TEST(GroverEmitTest, CsvMatchesGoldenBytes) {
    const GroverSummary g{2, 0.9453125, 1000, 945};
    const std::string expected =
        "iterations,success_probability,shots,hits,hit_rate\n"
        "2,0.945312500000,1000,945,0.945000000000\n";
    EXPECT_EQ(iqc::emit_grover_csv(g), expected);
}

TEST(GroverEmitTest, ZeroShotsGiveZeroRate) {
    const GroverSummary g{0, 0.5, 0, 0};
    EXPECT_NE(iqc::emit_grover_json(g, 1, 0).find("\"hit_rate\": 0.00000000000\n"),
              std::string::npos);
}

TEST(TerminationTagTest, RoundTripsAllValues) {
    for (Termination t : {Termination::ResidualZero, Termination::FailureStreak,
                          Termination::RoundBudget}) {
        EXPECT_EQ(iqc::termination_from_string(iqc::to_string(t)), t);
    }
    EXPECT_THROW(iqc::termination_from_string("Bogus"), std::invalid_argument);
    EXPECT_THROW(iqc::termination_from_string(""), std::invalid_argument);
}

TEST(ReportJsonTest, RealRunRoundTripsStructurally) {
    const auto oracle = iqc::cnf_to_oracle(iqc::parse_dimacs("p cnf 3 2\n-1 0\n3 0\n"));
    iqc::EnumerationConfig cfg;
    cfg.seed = 11;
    const EnumerationReport report = iqc::enumerate_solutions(oracle, cfg);

    const std::string text = iqc::emit_report_json(report, "enumerate", 3, cfg.seed);
    const iqc::ReportEnvelope env = iqc::parse_report_json(text);
    EXPECT_EQ(env.report.found, report.found);
    EXPECT_EQ(env.report.termination, report.termination);
    ASSERT_EQ(env.report.rounds.size(), report.rounds.size());
    for (std::size_t i = 0; i < report.rounds.size(); ++i) {
        EXPECT_EQ(env.report.rounds[i].measured, report.rounds[i].measured);
        // Round-trip equality is defined at the serialized precision: the
        // live value is a floating-point branch weight (0.25 up to an ulp),
        // and 12 significant digits are what the format carries.
        EXPECT_EQ(iqc::fmt_probability(env.report.rounds[i].success_probability),
                  iqc::fmt_probability(report.rounds[i].success_probability));
    }
}

}  // namespace

// iqc — command-line front end for the interferometric search library.
//
// Subcommands:
//   run        repeated single-shot interferometric measurements
//   enumerate  iterative all-solutions search with exclusions
//   sweep      Monte-Carlo noise sweep over a magnitude grid
//   grover     amplitude-amplification baseline
//
// Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 resource cap.
// Results go to stdout, diagnostics to stderr; nothing is written to disk.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iqc/iqc.hpp"

namespace {

// Failures caused by input files (missing, unreadable, malformed): exit 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Qubit cap, overridable through the environment.
int resolve_max_qubits() {
    const char* raw = std::getenv("IQC_MAX_QUBITS");
    if (raw == nullptr || *raw == '\0') return iqc::kDefaultMaxQubits;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1 || v > 62)
        throw std::invalid_argument("IQC_MAX_QUBITS must be an integer in [1, 62], got '" +
                                    std::string(raw) + "'");
    return static_cast<int>(v);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

enum class OracleFormat { Auto, Dimacs, Table };

OracleFormat named_format(const std::string& name) {
    if (name == "dimacs") return OracleFormat::Dimacs;
    if (name == "table") return OracleFormat::Table;
    return OracleFormat::Auto;
}

// File-extension first, then content: DIMACS always carries a "p cnf" header,
// a bitstring table never does.
OracleFormat sniff_format(const std::string& path, const std::string& text) {
    if (path.ends_with(".cnf") || path.ends_with(".dimacs")) return OracleFormat::Dimacs;
    if (path.ends_with(".table")) return OracleFormat::Table;
    return text.find("p cnf") != std::string::npos ? OracleFormat::Dimacs : OracleFormat::Table;
}

iqc::Oracle load_oracle(const std::string& path, OracleFormat format, int max_qubits) {
    const std::string text = read_file(path);
    if (format == OracleFormat::Auto) format = sniff_format(path, text);
    try {
        if (format == OracleFormat::Dimacs) return iqc::cnf_to_oracle(iqc::parse_dimacs(text));
        const iqc::SolutionSet solutions = iqc::parse_truth_table(text);
        // A table oracle materializes 2^width entries; refuse before allocating.
        if (solutions.n_vars > max_qubits)
            throw iqc::resource_error(path + ": " + std::to_string(solutions.n_vars) +
                                      " variables exceeds the " + std::to_string(max_qubits) +
                                      "-qubit cap");
        return iqc::oracle_from_truth_table(solutions, solutions.n_vars);
    } catch (const iqc::parse_error& e) {
        throw input_error(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        // Structurally valid file describing an unusable oracle (e.g. width 0).
        throw input_error(path + ": " + e.what());
    }
}

struct CommonOpts {
    std::string oracle_path;
    std::string oracle_format = "auto";
    std::string output_format = "json";
    std::uint64_t seed = 0;
};

void add_common_flags(CLI::App* cmd, CommonOpts& c, const std::string& default_output) {
    c.output_format = default_output;
    cmd->add_option("--oracle", c.oracle_path, "Oracle file (DIMACS CNF or bitstring table)")
        ->required();
    cmd->add_option("--oracle-format", c.oracle_format, "Oracle file format")
        ->check(CLI::IsMember({"auto", "dimacs", "table"}))
        ->capture_default_str();
    cmd->add_option("--format", c.output_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--seed", c.seed, "Root RNG seed (echoed in the output)")
        ->capture_default_str();
}

int cmd_run(const CommonOpts& c, std::uint64_t shots, int max_qubits) {
    const iqc::Oracle oracle = load_oracle(c.oracle_path, named_format(c.oracle_format), max_qubits);
    iqc::Rng rng = iqc::make_rng(c.seed);

    iqc::EnumerationReport report;
    report.found = iqc::SolutionSet(oracle.n_vars());
    report.termination = iqc::Termination::RoundBudget;  // fixed shot budget by design
    for (std::uint64_t i = 1; i <= shots; ++i) {
        const iqc::InterferenceOutcome out = iqc::interfere_and_measure(oracle, rng, max_qubits);
        iqc::RoundRecord rec;
        rec.round = i;
        rec.success_probability = out.success_probability;
        rec.post_selected = out.post_selected;
        rec.measured = out.measured;
        rec.verified = out.post_selected && iqc::verify_candidate(oracle, *out.measured);
        if (rec.verified) report.found.insert(*out.measured);
        report.rounds.push_back(rec);
    }
    std::cout << (c.output_format == "csv"
                      ? iqc::emit_rounds_csv(report)
                      : iqc::emit_report_json(report, "run", oracle.n_vars(), c.seed));
    return 0;
}

int cmd_enumerate(const CommonOpts& c, iqc::EnumerationConfig cfg, int max_qubits) {
    const iqc::Oracle oracle = load_oracle(c.oracle_path, named_format(c.oracle_format), max_qubits);
    cfg.seed = c.seed;
    const iqc::EnumerationReport report = iqc::enumerate_solutions(oracle, cfg, max_qubits);
    std::cout << (c.output_format == "csv"
                      ? iqc::emit_rounds_csv(report)
                      : iqc::emit_report_json(report, "enumerate", oracle.n_vars(), c.seed));
    return 0;
}

int cmd_sweep(const CommonOpts& c, const std::string& model_name,
              const std::vector<double>& magnitudes, std::uint64_t trials,
              const std::string& point_name, int max_qubits) {
    const iqc::Oracle oracle = load_oracle(c.oracle_path, named_format(c.oracle_format), max_qubits);
    const iqc::NoiseModel model =
        model_name == "bitflip" ? iqc::NoiseModel::BitFlip : iqc::NoiseModel::Amplitude;
    const iqc::NoisePoint point = point_name == "after-spread" ? iqc::NoisePoint::AfterSpread
                                                               : iqc::NoisePoint::AfterOracle;
    std::vector<iqc::NoiseSpec> grid;
    grid.reserve(magnitudes.size());
    for (double m : magnitudes) grid.push_back({model, m});

    const iqc::SweepResult result = iqc::sweep(oracle, grid, trials, c.seed, point, max_qubits);
    std::cout << (c.output_format == "csv"
                      ? iqc::emit_sweep_csv(result)
                      : iqc::emit_sweep_json(result, oracle.n_vars(), c.seed, point));
    return 0;
}

int cmd_grover(const CommonOpts& c, const std::string& iterations_arg, std::uint64_t shots,
               int max_qubits) {
    const iqc::Oracle oracle = load_oracle(c.oracle_path, named_format(c.oracle_format), max_qubits);

    std::uint64_t iterations = 0;
    if (iterations_arg == "auto") {
        const iqc::SolutionSet solutions = iqc::brute_force_solutions(oracle, max_qubits);
        if (solutions.empty())
            throw std::invalid_argument(
                "grover: automatic iteration count needs a satisfiable oracle; pass --iterations");
        iterations = iqc::optimal_grover_iterations(std::uint64_t{1} << oracle.n_vars(),
                                                    solutions.size());
    } else {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(iterations_arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != iterations_arg.size())
            throw std::invalid_argument("grover: --iterations must be 'auto' or a non-negative integer, got '" +
                                        iterations_arg + "'");
        iterations = v;
    }

    const iqc::Statevector final_state = iqc::grover_state(oracle, iterations, max_qubits);
    iqc::GroverSummary summary;
    summary.iterations = iterations;
    summary.success_probability = iqc::grover_success_probability(final_state, oracle);
    summary.shots = shots;
    iqc::Rng rng = iqc::make_rng(c.seed);
    for (std::uint64_t i = 0; i < shots; ++i) {
        const iqc::BasisState measured = iqc::measure_all(final_state, rng);
        if (oracle.predicate(measured.index())) ++summary.hits;
    }
    std::cout << (c.output_format == "csv"
                      ? iqc::emit_grover_csv(summary)
                      : iqc::emit_grover_json(summary, oracle.n_vars(), c.seed));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interferometric search simulator: oracle marking, two-arm cancellation, "
                 "post-selected enumeration, and noise experiments"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    std::uint64_t run_shots = 1;
    CLI::App* run_cmd = app.add_subcommand("run", "Repeated single-shot interferometric runs");
    add_common_flags(run_cmd, run_opts, "json");
    run_cmd->add_option("--shots", run_shots, "Number of independent runs")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CommonOpts enum_opts;
    iqc::EnumerationConfig enum_cfg;
    bool sampled = false;
    CLI::App* enum_cmd = app.add_subcommand("enumerate", "Find all solutions by iterated exclusion");
    add_common_flags(enum_cmd, enum_opts, "json");
    enum_cmd->add_option("--max-rounds", enum_cfg.max_rounds, "Hard round budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    enum_cmd->add_option("--failure-streak", enum_cfg.failure_streak_limit,
                         "Consecutive failed rounds that end a sampled-mode search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    enum_cmd->add_flag("--sampled", sampled,
                       "Stop on a failure streak instead of the exact residual check");

    CommonOpts sweep_opts;
    std::string sweep_model = "amplitude";
    std::vector<double> sweep_grid;
    std::uint64_t sweep_trials = 100;
    std::string noise_point = "after-oracle";
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Noise-robustness sweep over a magnitude grid");
    add_common_flags(sweep_cmd, sweep_opts, "csv");
    sweep_cmd->add_option("--model", sweep_model, "Noise channel")
        ->check(CLI::IsMember({"amplitude", "bitflip"}))
        ->capture_default_str();
    sweep_cmd->add_option("--grid", sweep_grid, "Comma-separated noise magnitudes")
        ->delimiter(',')
        ->required();
    sweep_cmd->add_option("--trials", sweep_trials, "Trials per grid point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--noise-point", noise_point, "Where the channel acts in the circuit")
        ->check(CLI::IsMember({"after-oracle", "after-spread"}))
        ->capture_default_str();

    CommonOpts grover_opts;
    std::string grover_iterations = "auto";
    std::uint64_t grover_shots = 1;
    CLI::App* grover_cmd = app.add_subcommand("grover", "Amplitude-amplification baseline");
    add_common_flags(grover_cmd, grover_opts, "json");
    grover_cmd->add_option("--iterations", grover_iterations,
                           "Iteration count, or 'auto' for the optimal count")
        ->capture_default_str();
    grover_cmd->add_option("--shots", grover_shots, "Number of measurements of the final state")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic
        return 1;
    }

    try {
        const int max_qubits = resolve_max_qubits();
        if (run_cmd->parsed()) return cmd_run(run_opts, run_shots, max_qubits);
        if (enum_cmd->parsed()) {
            enum_cfg.exact_mode = !sampled;
            return cmd_enumerate(enum_opts, enum_cfg, max_qubits);
        }
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_opts, sweep_model, sweep_grid, sweep_trials, noise_point,
                             max_qubits);
        if (grover_cmd->parsed())
            return cmd_grover(grover_opts, grover_iterations, grover_shots, max_qubits);
        std::cerr << "iqc: no subcommand selected\n";
        return 1;
    } catch (const input_error& e) {
        std::cerr << "iqc: " << e.what() << '\n';
        return 2;
    } catch (const iqc::parse_error& e) {
        std::cerr << "iqc: " << e.what() << '\n';
        return 2;
    } catch (const iqc::resource_error& e) {
        std::cerr << "iqc: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "iqc: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "iqc: " << e.what() << '\n';
        return 1;
    }
}

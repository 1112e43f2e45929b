// Command-line front end: phase latencies, queueing sweeps, simulation
// runs and flow transcripts, with CSV/JSON-lines output for plotting.
//
// Exit codes: 0 success, 2 bad arguments or config, 3 unstable queue,
// 4 simulation out of tolerance.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mquma/errors.hpp"
#include "mquma/hybrid.hpp"
#include "mquma/queueing.hpp"
#include "mquma/sim.hpp"
#include "mquma/text.hpp"
#include "mquma/timing.hpp"

namespace {

using namespace mquma;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnstable = 3;
constexpr int kExitOutOfTolerance = 4;

TimingSpec spec_from(const std::optional<std::string>& config_path) {
    if (!config_path) return TimingSpec{};
    return load_timing_spec(*config_path);
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw ConfigError("failed writing '" + path + "'");
}

int cmd_phases(const std::optional<std::string>& config_path,
               const std::optional<std::string>& out_path) {
    TimingSpec spec = spec_from(config_path);

    std::string csv = "phase,term,count,unit_ms,contribution_ms\n";
    std::printf("%-26s %10s\n", "phase", "total_ms");
    for (PhaseKind phase : kAllPhases) {
        LatencyBreakdown b = phase_latency(phase, spec.config, spec.coefficients[phase]);
        std::printf("%-26s %10lld\n", b.label.c_str(), static_cast<long long>(b.total_ms));
        for (const auto& term : b.terms) {
            std::printf("    %3lld x %-14s @ %4lld = %6lld\n",
                        static_cast<long long>(term.count),
                        std::string(timing_entry_name(term.entry)).c_str(),
                        static_cast<long long>(term.unit_ms),
                        static_cast<long long>(term.contribution_ms));
            csv += b.label + ',' + std::string(timing_entry_name(term.entry)) + ',' +
                   std::to_string(term.count) + ',' + std::to_string(term.unit_ms) + ',' +
                   std::to_string(term.contribution_ms) + '\n';
        }
        csv += b.label + ",total,,," + std::to_string(b.total_ms) + '\n';
    }

    OverheadReport r = publish_overhead_ratio(spec.config, spec.coefficients);
    std::printf("\npublish overhead candidates (subscribe=%lld access=%lld publish=%lld):\n",
                static_cast<long long>(r.subscribe_total_ms),
                static_cast<long long>(r.access_total_ms),
                static_cast<long long>(r.publish_total_ms));
    std::printf("    subscribe/publish                 = %s\n",
                format_double(r.subscribe_vs_publish).c_str());
    std::printf("    access/publish                    = %s\n",
                format_double(r.access_vs_publish).c_str());
    std::printf("    subscribe/(subscribe+access)      = %s\n",
                format_double(r.subscribe_vs_subscribe_plus_access).c_str());
    std::printf("    access-processing/publish         = %s\n",
                format_double(r.access_processing_vs_publish).c_str());

    if (out_path) write_text(*out_path, csv);
    return kExitOk;
}

int cmd_sweep(double mu, const SweepRange& range, const std::optional<std::string>& out_path) {
    std::vector<SweepRow> rows = sweep(mu, range);
    std::string csv = sweep_csv(rows);
    if (out_path) {
        write_text(*out_path, csv);
        std::printf("%zu rows -> %s\n", rows.size(), out_path->c_str());
    } else {
        std::fputs(csv.c_str(), stdout);
        std::fprintf(stderr, "%zu rows\n", rows.size());
    }
    return kExitOk;
}

int cmd_simulate(double lambda, double mu, std::uint64_t arrivals, std::uint64_t seed,
                 double tolerance, const std::optional<std::string>& out_path) {
    SimConfig config;
    config.lambda = lambda;
    config.mu = mu;
    config.arrivals_target = arrivals;
    config.seed = seed;

    ValidationReport report = validate_against_analytic(config, tolerance);
    std::printf("%-6s %22s %22s %12s %s\n", "metric", "simulated", "analytic", "rel_error",
                "verdict");
    for (const MetricCheck& c : report.checks) {
        std::printf("%-6s %22s %22s %12.3e %s\n", c.name.c_str(),
                    format_double(c.simulated).c_str(), format_double(c.analytic).c_str(),
                    c.relative_error, c.pass ? "pass" : "FAIL");
    }
    std::printf("seed=%llu arrivals=%llu verdict=%s\n",
                static_cast<unsigned long long>(report.result.seed),
                static_cast<unsigned long long>(report.result.arrivals_observed),
                report.all_pass ? "pass" : "FAIL");

    std::string csv = sim_csv_header() + '\n' + sim_csv_row(config, report.result) + '\n';
    if (out_path) write_text(*out_path, csv);
    return report.all_pass ? kExitOk : kExitOutOfTolerance;
}

int cmd_trace(const std::string& phase_arg, const std::optional<std::string>& config_path,
              const std::optional<std::string>& out_path) {
    std::optional<PhaseKind> phase = parse_phase(phase_arg);
    if (!phase) {
        std::fprintf(stderr, "unknown phase '%s'\n", phase_arg.c_str());
        return kExitUsage;
    }
    TimingSpec spec = spec_from(config_path);

    // Run the canonical order up to the requested phase so prerequisites
    // are in place, then trace the phase itself.
    HybridSystem system;
    static constexpr std::array<PhaseKind, kPhaseCount> kCanonicalOrder = {
        PhaseKind::ProtectionAuthorization, PhaseKind::Subscribe, PhaseKind::InitialPublish,
        PhaseKind::Access, PhaseKind::Publish,
    };
    for (PhaseKind p : kCanonicalOrder) {
        if (p == *phase) break;
        system.run_flow(p);
    }
    FlowTranscript t = system.run_flow(*phase);

    std::ostringstream lines;
    for (const ProtocolMessage& m : t.messages) lines << to_json_line(m) << '\n';

    LatencyBreakdown coefficient = phase_latency(*phase, spec.config, spec.coefficients[*phase]);
    LatencyBreakdown derived = cost_transcript(t, spec.config);
    nlohmann::ordered_json footer;
    footer["footer"]["phase"] = phase_name(*phase);
    footer["footer"]["messages"] = t.messages.size();
    footer["footer"]["coefficient_ms"] = coefficient.total_ms;
    footer["footer"]["transcript_ms"] = derived.total_ms;
    lines << footer.dump() << '\n';

    if (out_path) {
        write_text(*out_path, lines.str());
    } else {
        std::fputs(lines.str().c_str(), stdout);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MQTT/UMA hybrid protocol model: latencies, queueing curves, simulation"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::optional<std::string> out_path;

    auto* phases = app.add_subcommand("phases", "Print the five phase latencies");
    phases->add_option("--config", config_path, "Timing config JSON");
    phases->add_option("--out", out_path, "Write the breakdown as CSV");

    SweepRange range;
    double mu = kDefaultServiceRatePerMs;
    auto* sweep_cmd = app.add_subcommand("sweep", "M/M/1 metrics over an inter-arrival range");
    sweep_cmd->add_option("--mu", mu, "Service rate per ms");
    sweep_cmd->add_option("--inter-arrival-min", range.inter_arrival_min_ms,
                          "Smallest mean inter-arrival time (ms)");
    sweep_cmd->add_option("--inter-arrival-max", range.inter_arrival_max_ms,
                          "Largest mean inter-arrival time (ms)");
    sweep_cmd->add_option("--inter-arrival-points,--points", range.points, "Number of rows");
    sweep_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");

    double lambda = 1.0 / 640.0;
    std::uint64_t arrivals = 1'000'000;
    std::uint64_t seed = kDefaultSimSeed;
    double tolerance = 0.05;
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Run the discrete-event M/M/1 simulator and validate");
    simulate_cmd->add_option("--lambda", lambda, "Arrival rate per ms");
    simulate_cmd->add_option("--mu", mu, "Service rate per ms");
    simulate_cmd->add_option("--arrivals", arrivals, "Arrivals to simulate");
    simulate_cmd->add_option("--seed", seed, "PRNG seed");
    simulate_cmd->add_option("--tolerance", tolerance, "Relative tolerance per metric");
    simulate_cmd->add_option("--out", out_path, "CSV output path");

    std::string phase_arg;
    auto* trace_cmd = app.add_subcommand("trace", "Emit a flow transcript as JSON lines");
    trace_cmd->add_option("phase", phase_arg, "Flow name")->required();
    trace_cmd->add_option("--config", config_path, "Timing config JSON");
    trace_cmd->add_option("--out", out_path, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (phases->parsed()) return cmd_phases(config_path, out_path);
        if (sweep_cmd->parsed()) return cmd_sweep(mu, range, out_path);
        if (simulate_cmd->parsed()) {
            return cmd_simulate(lambda, mu, arrivals, seed, tolerance, out_path);
        }
        if (trace_cmd->parsed()) return cmd_trace(phase_arg, config_path, out_path);
    } catch (const UnstableQueue& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUnstable;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}

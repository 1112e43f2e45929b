#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mquma/queueing.hpp"

namespace mquma {

/// Default PRNG seed, echoed in every result and CSV row.
inline constexpr std::uint64_t kDefaultSimSeed = 42;

struct SimConfig {
    double lambda = 1.0 / 640.0;          // arrivals per ms (Poisson process)
    double mu = kDefaultServiceRatePerMs; // services per ms (exponential)
    std::uint64_t arrivals_target = 1'000'000;
    double warmup_fraction = 0.1;  // earliest arrivals excluded from stats
    std::uint64_t seed = kDefaultSimSeed;
    bool zero_service = false;  // degenerate mode: instantaneous service

    void validate() const;  // std::invalid_argument on bad fields
};

struct SimResult {
    // Empirical counterparts of QueueMetrics, over the post-warmup window.
    double rho = 0;
    double Lq = 0;
    double Wq_ms = 0;
    double W_ms = 0;
    double L = 0;
    double idle = 0;

    double lambda_empirical = 0;  // counted arrivals / measured window

    std::uint64_t arrivals_observed = 0;
    std::uint64_t departures = 0;
    std::uint64_t seed = 0;

    // Snapshot when the last arrival is admitted: conservation holds as
    // arrivals_observed == departures_at_horizon + in_system_at_horizon.
    std::uint64_t departures_at_horizon = 0;
    std::uint64_t in_system_at_horizon = 0;
    double horizon_ms = 0;
    double end_ms = 0;  // last departure; the queue fully drains
};

/// Seeded event-driven FIFO single-server simulation.
///
/// Randomness comes from two mt19937_64 streams (arrivals and services)
/// derived from the one seed; exponential variates use the inverse CDF
/// -log1p(-u)/rate with u drawn as 53-bit uniforms. When an arrival and
/// a departure share a timestamp the departure is processed first.
/// Identical configs produce bit-identical results.
SimResult simulate(const SimConfig& config);

struct MetricCheck {
    std::string name;
    double simulated = 0;
    double analytic = 0;
    double relative_error = 0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<MetricCheck> checks;
    bool all_pass = false;
    SimResult result;
    QueueMetrics analytic;
};

/// Runs the simulation and compares each empirical metric against the
/// closed-form value at relative tolerance. Throws UnstableQueue when
/// rho >= 1 (via metrics()).
ValidationReport validate_against_analytic(const SimConfig& config, double tolerance);

/// One CSV row matching the sweep schema plus seed and arrivals columns.
std::string sim_csv_header();
std::string sim_csv_row(const SimConfig& config, const SimResult& result);

}  // namespace mquma

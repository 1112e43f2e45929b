#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mquma {

/// Rates are per millisecond throughout; times come out in ms.
struct QueueParameters {
    double lambda = 0;  // arrival rate
    double mu = 0;      // service rate
};

/// Default service rate: one publish path per 587 ms.
inline constexpr double kDefaultServiceRatePerMs = 1.0 / 587.0;

struct QueueMetrics {
    double rho = 0;    // utilization, lambda/mu
    double Lq = 0;     // mean number waiting
    double Wq_ms = 0;  // mean wait before service
    double W_ms = 0;   // mean time in system
    double L = 0;      // mean number in system
    double idle = 0;   // fraction of time the server is idle
};

/// Closed-form M/M/1 steady-state metrics:
///   rho = lambda/mu, Lq = rho^2/(1-rho), Wq = Lq/lambda,
///   W = Wq + 1/mu, L = lambda*W, idle = 1 - rho.
/// Throws UnstableQueue when rho >= 1 and std::invalid_argument on
/// non-positive rates.
QueueMetrics metrics(const QueueParameters& params);

/// Inclusive sweep over mean inter-arrival times. The default covers
/// 588..640 ms in 66 evenly spaced points (step 52/65 ms).
struct SweepRange {
    double inter_arrival_min_ms = 588.0;
    double inter_arrival_max_ms = 640.0;
    std::size_t points = 66;
};

struct SweepRow {
    double lambda = 0;
    double inter_arrival_ms = 0;
    QueueMetrics m;
};

/// One row per lambda, densest arrivals first. Instability at any point
/// propagates as UnstableQueue; an inverted or empty range is an
/// std::invalid_argument.
std::vector<SweepRow> sweep(double mu, const SweepRange& range = {});

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace mquma

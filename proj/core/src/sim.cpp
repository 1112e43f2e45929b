#include "mquma/sim.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>

#include "mquma/errors.hpp"
#include "mquma/text.hpp"

namespace mquma {

namespace {

constexpr std::uint64_t kServiceStreamSalt = 0x9e3779b97f4a7c15ULL;
constexpr double kInf = std::numeric_limits<double>::infinity();

double exp_draw(std::mt19937_64& rng, double rate) {
    // 53-bit uniform in [0,1), inverse CDF. Fully specified arithmetic,
    // so results are identical across platforms for a given seed.
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return -std::log1p(-u) / rate;
}

}  // namespace

void SimConfig::validate() const {
    if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
    if (!zero_service && !(mu > 0)) throw std::invalid_argument("mu must be positive");
    if (arrivals_target < 1) throw std::invalid_argument("need at least one arrival");
    if (!(warmup_fraction >= 0) || warmup_fraction >= 1) {
        throw std::invalid_argument("warmup fraction must be in [0,1)");
    }
}

SimResult simulate(const SimConfig& config) {
    config.validate();

    std::mt19937_64 arrival_rng(config.seed);
    std::mt19937_64 service_rng(config.seed ^ kServiceStreamSalt);
    auto service_time = [&] {
        return config.zero_service ? 0.0 : exp_draw(service_rng, config.mu);
    };

    const std::uint64_t target = config.arrivals_target;
    const std::uint64_t warmup_count =
        static_cast<std::uint64_t>(config.warmup_fraction * static_cast<double>(target));

    struct Waiting {
        double arrived_at;
        std::uint64_t index;
    };
    std::deque<Waiting> queue;
    bool busy = false;
    Waiting in_service{0, 0};

    double next_arrival = exp_draw(arrival_rng, config.lambda);
    double next_departure = kInf;

    std::uint64_t arrivals = 0;
    std::uint64_t departures = 0;

    double now = 0;
    bool measuring = false;
    double measure_start = 0;
    double area_queue = 0;
    double area_system = 0;
    double busy_time = 0;
    double wq_sum = 0;
    double w_sum = 0;

    SimResult out;
    out.seed = config.seed;

    auto counted = [&](std::uint64_t index) { return index >= warmup_count; };

    while (arrivals < target || busy || !queue.empty()) {
        bool arrivals_left = arrivals < target;
        bool take_departure = busy && (!arrivals_left || next_departure <= next_arrival);
        double t = take_departure ? next_departure : next_arrival;
        if (t < now) throw std::logic_error("event time went backwards");

        if (measuring) {
            double dt = t - now;
            area_queue += static_cast<double>(queue.size()) * dt;
            area_system += (static_cast<double>(queue.size()) + (busy ? 1.0 : 0.0)) * dt;
            if (busy) busy_time += dt;
        }
        now = t;

        if (take_departure) {
            ++departures;
            if (counted(in_service.index)) w_sum += now - in_service.arrived_at;
            if (!queue.empty()) {
                in_service = queue.front();
                queue.pop_front();
                if (counted(in_service.index)) wq_sum += now - in_service.arrived_at;
                next_departure = now + service_time();
            } else {
                busy = false;
                next_departure = kInf;
            }
        } else {
            std::uint64_t index = arrivals++;
            if (!measuring && index == warmup_count) {
                measuring = true;
                measure_start = now;
            }
            if (!busy) {
                busy = true;
                in_service = {now, index};
                if (counted(index)) wq_sum += 0;  // served on arrival
                next_departure = now + service_time();
            } else {
                queue.push_back({now, index});
            }
            if (arrivals < target) {
                next_arrival = now + exp_draw(arrival_rng, config.lambda);
            } else {
                next_arrival = kInf;
                out.horizon_ms = now;
                out.departures_at_horizon = departures;
                out.in_system_at_horizon = queue.size() + (busy ? 1 : 0);
            }
        }
    }

    out.arrivals_observed = arrivals;
    out.departures = departures;
    out.end_ms = now;

    const double window = now - measure_start;
    const double counted_n = static_cast<double>(target - warmup_count);
    out.Wq_ms = wq_sum / counted_n;
    out.W_ms = w_sum / counted_n;
    if (window > 0) {
        out.rho = busy_time / window;
        out.Lq = area_queue / window;
        out.L = area_system / window;
        out.lambda_empirical = counted_n / window;
    }
    out.idle = 1.0 - out.rho;
    return out;
}

ValidationReport validate_against_analytic(const SimConfig& config, double tolerance) {
    ValidationReport report;
    report.analytic = metrics({config.lambda, config.mu});
    report.result = simulate(config);

    auto check = [&](const char* name, double sim, double ana) {
        MetricCheck c;
        c.name = name;
        c.simulated = sim;
        c.analytic = ana;
        c.relative_error = std::abs(sim - ana) / std::abs(ana);
        c.pass = c.relative_error <= tolerance;
        report.checks.push_back(c);
    };
    check("rho", report.result.rho, report.analytic.rho);
    check("Lq", report.result.Lq, report.analytic.Lq);
    check("Wq_ms", report.result.Wq_ms, report.analytic.Wq_ms);
    check("W_ms", report.result.W_ms, report.analytic.W_ms);
    check("L", report.result.L, report.analytic.L);
    check("idle", report.result.idle, report.analytic.idle);

    report.all_pass = true;
    for (const MetricCheck& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

std::string sim_csv_header() {
    return sweep_csv_header() + ",seed,arrivals";
}

std::string sim_csv_row(const SimConfig& config, const SimResult& result) {
    std::string out;
    out += format_double(config.lambda);
    out += ',';
    out += format_double(1.0 / config.lambda);
    out += ',';
    out += format_double(result.rho);
    out += ',';
    out += format_double(result.Lq);
    out += ',';
    out += format_double(result.Wq_ms);
    out += ',';
    out += format_double(result.W_ms);
    out += ',';
    out += format_double(result.L);
    out += ',';
    out += format_double(result.idle);
    out += ',';
    out += std::to_string(result.seed);
    out += ',';
    out += std::to_string(result.arrivals_observed);
    return out;
}

}  // namespace mquma

#include "mquma/queueing.hpp"

#include <stdexcept>

#include "mquma/errors.hpp"
#include "mquma/text.hpp"

namespace mquma {

QueueMetrics metrics(const QueueParameters& params) {
    if (!(params.lambda > 0) || !(params.mu > 0)) {
        throw std::invalid_argument("queue rates must be positive");
    }
    double rho = params.lambda / params.mu;
    if (rho >= 1.0) {
        throw UnstableQueue("rho = " + format_double(rho) + " >= 1, no steady state");
    }
    QueueMetrics m;
    m.rho = rho;
    m.Lq = rho * rho / (1.0 - rho);
    m.Wq_ms = m.Lq / params.lambda;
    m.W_ms = m.Wq_ms + 1.0 / params.mu;
    m.L = params.lambda * m.W_ms;
    m.idle = 1.0 - rho;
    return m;
}

std::vector<SweepRow> sweep(double mu, const SweepRange& range) {
    if (range.points == 0) throw std::invalid_argument("sweep needs at least one point");
    if (range.inter_arrival_min_ms > range.inter_arrival_max_ms) {
        throw std::invalid_argument("inverted inter-arrival range");
    }
    if (!(range.inter_arrival_min_ms > 0)) {
        throw std::invalid_argument("inter-arrival times must be positive");
    }
    if (range.points == 1 && range.inter_arrival_min_ms != range.inter_arrival_max_ms) {
        throw std::invalid_argument("a single-point sweep needs min == max");
    }

    double step = range.points == 1 ? 0.0
                                    : (range.inter_arrival_max_ms - range.inter_arrival_min_ms) /
                                          static_cast<double>(range.points - 1);
    std::vector<SweepRow> rows;
    rows.reserve(range.points);
    for (std::size_t k = 0; k < range.points; ++k) {
        SweepRow row;
        row.inter_arrival_ms = range.inter_arrival_min_ms + static_cast<double>(k) * step;
        row.lambda = 1.0 / row.inter_arrival_ms;
        row.m = metrics({row.lambda, mu});
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_csv_header() {
    return "lambda,inter_arrival_ms,rho,Lq,Wq_ms,W_ms,L,idle";
}

std::string sweep_csv_row(const SweepRow& row) {
    std::string out;
    out += format_double(row.lambda);
    out += ',';
    out += format_double(row.inter_arrival_ms);
    out += ',';
    out += format_double(row.m.rho);
    out += ',';
    out += format_double(row.m.Lq);
    out += ',';
    out += format_double(row.m.Wq_ms);
    out += ',';
    out += format_double(row.m.W_ms);
    out += ',';
    out += format_double(row.m.L);
    out += ',';
    out += format_double(row.m.idle);
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = sweep_csv_header();
    out += '\n';
    for (const SweepRow& row : rows) {
        out += sweep_csv_row(row);
        out += '\n';
    }
    return out;
}

}  // namespace mquma

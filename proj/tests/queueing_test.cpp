#include "mquma/queueing.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "mquma/errors.hpp"
#include "mquma/text.hpp"

using namespace mquma;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Metrics, HalfLoadIsExact) {
    QueueMetrics m = metrics({0.5, 1.0});
    EXPECT_DOUBLE_EQ(m.rho, 0.5);
    EXPECT_DOUBLE_EQ(m.Lq, 0.5);
    EXPECT_DOUBLE_EQ(m.idle, 0.5);
    EXPECT_DOUBLE_EQ(m.Wq_ms, 1.0);
    EXPECT_DOUBLE_EQ(m.W_ms, 2.0);
    EXPECT_DOUBLE_EQ(m.L, 1.0);
}

TEST(Metrics, SaturationIsUnstable) {
    EXPECT_THROW(metrics({1.0, 1.0}), UnstableQueue);
    EXPECT_THROW(metrics({2.0, 1.0}), UnstableQueue);
}

TEST(Metrics, NonPositiveRatesAreRejected) {
    EXPECT_THROW(metrics({0.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(metrics({1.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(metrics({-1.0, 1.0}), std::invalid_argument);
}

// Endpoints of the published curves: densest and sparsest arrivals at
// the default service rate.
TEST(Metrics, CurveEndpointHighLoad) {
    QueueMetrics m = metrics({1.0 / 588.0, 1.0 / 587.0});
    EXPECT_LT(rel(m.rho, 0.9982993197278911), 1e-9);
    EXPECT_LT(rel(m.Lq, 586.0017006802), 1e-9);
    EXPECT_LT(rel(m.Wq_ms, 344569.0), 1e-9);
    EXPECT_LT(rel(m.W_ms, 345156.0), 1e-9);
    EXPECT_LT(rel(m.L, 587.0), 1e-9);
    EXPECT_LT(rel(m.idle, 0.0017006802721), 1e-9);
}

TEST(Metrics, CurveEndpointModerateLoad) {
    QueueMetrics m = metrics({1.0 / 640.0, 1.0 / 587.0});
    EXPECT_LT(rel(m.rho, 0.9171875), 1e-12);
    EXPECT_LT(rel(m.Lq, 10.158284198), 1e-9);
    EXPECT_LT(rel(m.W_ms, 7088.3018868), 1e-9);
}

TEST(Metrics, IdentitiesHoldToMachinePrecision) {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> rho_dist(0.01, 0.9985);
    std::uniform_real_distribution<double> log_mu(-4.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        double mu = std::pow(10.0, log_mu(rng));
        double lambda = rho_dist(rng) * mu;
        QueueMetrics m = metrics({lambda, mu});

        EXPECT_LT(rel(m.L, lambda * m.W_ms), 1e-12);
        EXPECT_LT(rel(m.Lq, lambda * m.Wq_ms), 1e-12);
        EXPECT_LT(rel(m.W_ms, m.Wq_ms + 1.0 / mu), 1e-12);
        EXPECT_EQ(m.idle + m.rho, 1.0);  // exact
        EXPECT_LT(rel(m.L - m.Lq, m.rho), 1e-12);
    }
}

TEST(Sweep, DefaultHas66RowsWithTheKnownFirstRow) {
    auto rows = sweep(kDefaultServiceRatePerMs);
    ASSERT_EQ(rows.size(), 66u);
    EXPECT_DOUBLE_EQ(rows.front().inter_arrival_ms, 588.0);
    EXPECT_NEAR(rows.front().m.rho, 0.9982993197278911, 1e-12);
    EXPECT_DOUBLE_EQ(rows.back().inter_arrival_ms, 640.0);
    EXPECT_NEAR(rows.back().m.rho, 0.9171875, 1e-12);
}

TEST(Sweep, RowsMatchIndependentPerPointEvaluation) {
    auto rows = sweep(kDefaultServiceRatePerMs);
    for (const SweepRow& row : rows) {
        QueueMetrics again = metrics({row.lambda, kDefaultServiceRatePerMs});
        EXPECT_EQ(row.m.rho, again.rho);
        EXPECT_EQ(row.m.Lq, again.Lq);
        EXPECT_EQ(row.m.Wq_ms, again.Wq_ms);
        EXPECT_EQ(row.m.W_ms, again.W_ms);
        EXPECT_EQ(row.m.L, again.L);
        EXPECT_EQ(row.m.idle, again.idle);
    }
}

TEST(Sweep, SinglePoint) {
    auto rows = sweep(kDefaultServiceRatePerMs, {600.0, 600.0, 1});
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_DOUBLE_EQ(rows[0].lambda, 1.0 / 600.0);
}

TEST(Sweep, BadRangesAreRejected) {
    EXPECT_THROW(sweep(kDefaultServiceRatePerMs, {640.0, 588.0, 66}), std::invalid_argument);
    EXPECT_THROW(sweep(kDefaultServiceRatePerMs, {588.0, 640.0, 0}), std::invalid_argument);
    EXPECT_THROW(sweep(kDefaultServiceRatePerMs, {588.0, 640.0, 1}), std::invalid_argument);
    EXPECT_THROW(sweep(kDefaultServiceRatePerMs, {-1.0, 640.0, 5}), std::invalid_argument);
}

TEST(Sweep, UnstablePointPropagates) {
    EXPECT_THROW(sweep(kDefaultServiceRatePerMs, {500.0, 640.0, 10}), UnstableQueue);
}

TEST(Sweep, MetricsAreMonotoneAcrossTheRange) {
    auto rows = sweep(kDefaultServiceRatePerMs);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        // inter-arrival grows, so load and congestion strictly fall
        EXPECT_LT(rows[i].m.rho, rows[i - 1].m.rho);
        EXPECT_LT(rows[i].m.Lq, rows[i - 1].m.Lq);
        EXPECT_LT(rows[i].m.Wq_ms, rows[i - 1].m.Wq_ms);
        EXPECT_LT(rows[i].m.W_ms, rows[i - 1].m.W_ms);
        EXPECT_LT(rows[i].m.L, rows[i - 1].m.L);
        EXPECT_GT(rows[i].m.idle, rows[i - 1].m.idle);
    }
}

TEST(SweepCsv, SchemaAndDeterminism) {
    auto rows = sweep(kDefaultServiceRatePerMs, {600.0, 608.0, 3});
    std::string csv = sweep_csv(rows);
    EXPECT_EQ(csv, sweep_csv(rows));  // byte-identical on repeat

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "lambda,inter_arrival_ms,rho,Lq,Wq_ms,W_ms,L,idle");
    std::size_t data_rows = 0;
    while (std::getline(in, line)) {
        ++data_rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7);
        EXPECT_EQ(line.find(' '), std::string::npos);
    }
    EXPECT_EQ(data_rows, 3u);
}

TEST(FormatDouble, RoundTripsExactly) {
    for (double v : {0.9982993197278911, 1.0 / 588.0, 344568.99999998836, 0.5, 640.0}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
    EXPECT_EQ(format_double(588.0), "588");
}

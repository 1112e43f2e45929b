#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mquma/hybrid.hpp"
#include "mquma/message.hpp"

namespace mquma {

/// The twelve tunable times: six per-node processing times followed by
/// six per-link transmission times.
enum class TimingEntry : std::uint8_t {
    T_P1,
    T_MB1_P2_RO,
    T_AS,
    T_S1_MB2_RS,
    T_S2_RP,
    T_Client,
    T_P1xMB1,
    T_MB1xRS,
    T_RSxAS,
    T_ClientxRS,
    T_ClientxAS,
    T_S2RPxClient,
};

inline constexpr std::size_t kTimingEntryCount = 12;

std::string_view timing_entry_name(TimingEntry entry);
std::optional<TimingEntry> parse_timing_entry(std::string_view name);
bool is_link_entry(TimingEntry entry);

/// Processing entry for a node / link entry for a node pair. Throws
/// UnknownLink for a pair outside the topology (MB1<->S2 in particular).
TimingEntry processing_entry(NodeRole role);
TimingEntry link_entry(NodeRole a, NodeRole b);

/// Per-node processing and per-link transmission times in integer
/// milliseconds. Defaults are the fog-deployment measurements: Zigbee
/// local hop 4 ms, inter-region hop 200 ms, intra-fog hop 3 ms, and
/// 13+10+10 ms at the two database-backed fog servers.
struct TimingConfig {
    std::array<std::int64_t, kTimingEntryCount> ms = {10,  100, 33, 33, 100, 10,
                                                      4,   200, 3,  3,  3,   200};

    std::int64_t operator[](TimingEntry e) const { return ms[static_cast<std::size_t>(e)]; }
    std::int64_t& operator[](TimingEntry e) { return ms[static_cast<std::size_t>(e)]; }

    /// Throws ConfigError on a negative entry.
    void validate() const;
};

/// Integer multiplicity per timing entry for one phase.
struct CoefficientVector {
    std::array<std::int64_t, kTimingEntryCount> counts{};

    std::int64_t operator[](TimingEntry e) const { return counts[static_cast<std::size_t>(e)]; }
    std::int64_t& operator[](TimingEntry e) { return counts[static_cast<std::size_t>(e)]; }
};

CoefficientVector default_coefficients(PhaseKind phase);

struct PhaseCoefficientTable {
    std::array<CoefficientVector, kPhaseCount> by_phase;

    CoefficientVector& operator[](PhaseKind p) { return by_phase[static_cast<std::size_t>(p)]; }
    const CoefficientVector& operator[](PhaseKind p) const {
        return by_phase[static_cast<std::size_t>(p)];
    }

    static PhaseCoefficientTable defaults();
};

struct LatencyBreakdown {
    struct Term {
        TimingEntry entry;
        std::int64_t count;
        std::int64_t unit_ms;
        std::int64_t contribution_ms;  // count * unit_ms
    };

    std::string label;
    std::vector<Term> terms;  // nonzero-count terms, entry order
    std::int64_t total_ms = 0;
};

/// Closed-form phase latency: dot product of the phase's coefficient
/// vector with the timing config.
LatencyBreakdown phase_latency(PhaseKind phase, const TimingConfig& config = {});
LatencyBreakdown phase_latency(PhaseKind phase, const TimingConfig& config,
                               const CoefficientVector& coeffs);

/// Transcript-derived latency: one link charge per message plus one
/// processing charge per recorded step. Throws UnknownLink for messages
/// whose endpoints have no link.
LatencyBreakdown cost_transcript(const FlowTranscript& transcript, const TimingConfig& config = {});

/// Synthesizes a transcript whose message and step counts equal the
/// coefficient vector, so costing it reproduces the closed-form total
/// through the per-message route.
FlowTranscript coefficient_transcript(PhaseKind phase);
FlowTranscript coefficient_transcript(PhaseKind phase, const CoefficientVector& coeffs);

/// Candidate summaries of how the subscriber push path compares with
/// the client-initiated pull path. No single ratio captures it, so the
/// report carries four alternatives and endorses none.
struct OverheadReport {
    std::int64_t subscribe_total_ms = 0;
    std::int64_t access_total_ms = 0;
    std::int64_t publish_total_ms = 0;
    std::int64_t access_processing_ms = 0;  // access total minus its link terms

    double subscribe_vs_publish = 0;
    double access_vs_publish = 0;
    double subscribe_vs_subscribe_plus_access = 0;
    double access_processing_vs_publish = 0;
};

OverheadReport publish_overhead_ratio(const TimingConfig& config = {});
OverheadReport publish_overhead_ratio(const TimingConfig& config,
                                      const PhaseCoefficientTable& table);

/// Timing config plus optional per-phase coefficient overrides, as read
/// from a JSON file. Unknown keys, negative values and non-integers are
/// ConfigErrors.
struct TimingSpec {
    TimingConfig config;
    PhaseCoefficientTable coefficients = PhaseCoefficientTable::defaults();
};

TimingSpec parse_timing_spec(const std::string& json_text);
TimingSpec load_timing_spec(const std::filesystem::path& file);

}  // namespace mquma

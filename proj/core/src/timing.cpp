#include "mquma/timing.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mquma/errors.hpp"

namespace mquma {

namespace {

constexpr std::array<std::string_view, kTimingEntryCount> kEntryNames = {
    "T_P1",      "T_MB1_P2_RO", "T_AS",     "T_S1_MB2_RS", "T_S2_RP",     "T_Client",
    "T_P1xMB1",  "T_MB1xRS",    "T_RSxAS",  "T_ClientxRS", "T_ClientxAS", "T_S2RPxClient",
};

constexpr TimingEntry entry_at(std::size_t i) { return static_cast<TimingEntry>(i); }

}  // namespace

std::string_view timing_entry_name(TimingEntry entry) {
    return kEntryNames[static_cast<std::size_t>(entry)];
}

std::optional<TimingEntry> parse_timing_entry(std::string_view name) {
    for (std::size_t i = 0; i < kTimingEntryCount; ++i) {
        if (kEntryNames[i] == name) return entry_at(i);
    }
    return std::nullopt;
}

bool is_link_entry(TimingEntry entry) {
    return static_cast<std::size_t>(entry) >= 6;
}

TimingEntry processing_entry(NodeRole role) {
    switch (role) {
        case NodeRole::P1: return TimingEntry::T_P1;
        case NodeRole::Mb1P2Ro: return TimingEntry::T_MB1_P2_RO;
        case NodeRole::AuthServer: return TimingEntry::T_AS;
        case NodeRole::S1Mb2Rs: return TimingEntry::T_S1_MB2_RS;
        case NodeRole::S2Rp: return TimingEntry::T_S2_RP;
        case NodeRole::Client: return TimingEntry::T_Client;
    }
    return TimingEntry::T_Client;
}

TimingEntry link_entry(NodeRole a, NodeRole b) {
    auto match = [&](NodeRole x, NodeRole y) {
        return (a == x && b == y) || (a == y && b == x);
    };
    if (match(NodeRole::P1, NodeRole::Mb1P2Ro)) return TimingEntry::T_P1xMB1;
    if (match(NodeRole::Mb1P2Ro, NodeRole::S1Mb2Rs)) return TimingEntry::T_MB1xRS;
    if (match(NodeRole::S1Mb2Rs, NodeRole::AuthServer)) return TimingEntry::T_RSxAS;
    if (match(NodeRole::Client, NodeRole::S1Mb2Rs)) return TimingEntry::T_ClientxRS;
    if (match(NodeRole::Client, NodeRole::AuthServer)) return TimingEntry::T_ClientxAS;
    if (match(NodeRole::S2Rp, NodeRole::Client)) return TimingEntry::T_S2RPxClient;
    throw UnknownLink("no link between " + std::string(role_name(a)) + " and " +
                      std::string(role_name(b)));
}

void TimingConfig::validate() const {
    for (std::size_t i = 0; i < kTimingEntryCount; ++i) {
        if (ms[i] < 0) {
            throw ConfigError("negative time for " + std::string(kEntryNames[i]));
        }
    }
}

CoefficientVector default_coefficients(PhaseKind phase) {
    using E = TimingEntry;
    CoefficientVector v;
    switch (phase) {
        case PhaseKind::ProtectionAuthorization:
            v[E::T_MB1_P2_RO] = 1;
            v[E::T_AS] = 13;
            v[E::T_S1_MB2_RS] = 10;
            v[E::T_Client] = 10;
            v[E::T_MB1xRS] = 1;
            v[E::T_RSxAS] = 6;
            v[E::T_ClientxRS] = 4;
            v[E::T_ClientxAS] = 6;
            break;
        case PhaseKind::Access:
            v[E::T_AS] = 2;
            v[E::T_S1_MB2_RS] = 2;
            v[E::T_Client] = 2;
            v[E::T_RSxAS] = 2;
            v[E::T_ClientxRS] = 2;
            break;
        case PhaseKind::InitialPublish:
            v[E::T_P1] = 1;
            v[E::T_MB1_P2_RO] = 3;
            v[E::T_AS] = 2;
            v[E::T_S1_MB2_RS] = 5;
            v[E::T_MB1xRS] = 3;
            v[E::T_RSxAS] = 2;
            break;
        case PhaseKind::Publish:
            v[E::T_P1] = 1;
            v[E::T_MB1_P2_RO] = 1;
            v[E::T_AS] = 2;
            v[E::T_S1_MB2_RS] = 2;
            v[E::T_S2_RP] = 1;
            v[E::T_Client] = 2;
            v[E::T_P1xMB1] = 1;
            v[E::T_MB1xRS] = 1;
            v[E::T_RSxAS] = 2;
            v[E::T_ClientxRS] = 2;
            break;
        case PhaseKind::Subscribe:
            v[E::T_S1_MB2_RS] = 2;
            v[E::T_Client] = 2;
            v[E::T_ClientxRS] = 2;
            break;
    }
    return v;
}

PhaseCoefficientTable PhaseCoefficientTable::defaults() {
    PhaseCoefficientTable t;
    for (PhaseKind p : kAllPhases) t[p] = default_coefficients(p);
    return t;
}

namespace {

LatencyBreakdown breakdown_from_counts(std::string label, const CoefficientVector& counts,
                                       const TimingConfig& config) {
    LatencyBreakdown out;
    out.label = std::move(label);
    for (std::size_t i = 0; i < kTimingEntryCount; ++i) {
        TimingEntry e = entry_at(i);
        std::int64_t n = counts[e];
        if (n == 0) continue;
        std::int64_t contribution = n * config[e];
        out.terms.push_back({e, n, config[e], contribution});
        out.total_ms += contribution;
    }
    return out;
}

}  // namespace

LatencyBreakdown phase_latency(PhaseKind phase, const TimingConfig& config) {
    return phase_latency(phase, config, default_coefficients(phase));
}

LatencyBreakdown phase_latency(PhaseKind phase, const TimingConfig& config,
                               const CoefficientVector& coeffs) {
    config.validate();
    return breakdown_from_counts(std::string(phase_name(phase)), coeffs, config);
}

LatencyBreakdown cost_transcript(const FlowTranscript& transcript, const TimingConfig& config) {
    config.validate();
    CoefficientVector counts;
    for (const ProtocolMessage& m : transcript.messages) {
        counts[link_entry(m.from, m.to)] += 1;
    }
    for (const ProcessingStep& s : transcript.steps) {
        counts[processing_entry(s.at)] += 1;
    }
    std::string label = transcript.label.empty() ? "transcript" : transcript.label;
    return breakdown_from_counts(std::move(label), counts, config);
}

FlowTranscript coefficient_transcript(PhaseKind phase) {
    return coefficient_transcript(phase, default_coefficients(phase));
}

FlowTranscript coefficient_transcript(PhaseKind phase, const CoefficientVector& coeffs) {
    // Canonical endpoints per link entry; direction is irrelevant to cost.
    struct Endpoints {
        NodeRole from, to;
    };
    static constexpr std::array<Endpoints, 6> kLinkEndpoints = {{
        {NodeRole::P1, NodeRole::Mb1P2Ro},
        {NodeRole::Mb1P2Ro, NodeRole::S1Mb2Rs},
        {NodeRole::S1Mb2Rs, NodeRole::AuthServer},
        {NodeRole::Client, NodeRole::S1Mb2Rs},
        {NodeRole::Client, NodeRole::AuthServer},
        {NodeRole::Client, NodeRole::S2Rp},
    }};
    static constexpr std::array<NodeRole, 6> kProcessingRole = {
        NodeRole::P1,     NodeRole::Mb1P2Ro, NodeRole::AuthServer,
        NodeRole::S1Mb2Rs, NodeRole::S2Rp,   NodeRole::Client,
    };

    FlowTranscript t(std::string(phase_name(phase)));
    for (std::size_t i = 0; i < 6; ++i) {
        NodeRole role = kProcessingRole[i];
        std::int64_t n = coeffs[processing_entry(role)];
        for (std::int64_t k = 0; k < n; ++k) t.process(role);
    }
    for (std::size_t i = 0; i < 6; ++i) {
        const Endpoints& ep = kLinkEndpoints[i];
        std::int64_t n = coeffs[entry_at(6 + i)];
        for (std::int64_t k = 0; k < n; ++k) t.message(ep.from, ep.to, MessageKind::Publish);
    }
    return t;
}

OverheadReport publish_overhead_ratio(const TimingConfig& config) {
    return publish_overhead_ratio(config, PhaseCoefficientTable::defaults());
}

OverheadReport publish_overhead_ratio(const TimingConfig& config,
                                      const PhaseCoefficientTable& table) {
    config.validate();
    OverheadReport r;
    r.subscribe_total_ms =
        phase_latency(PhaseKind::Subscribe, config, table[PhaseKind::Subscribe]).total_ms;
    r.access_total_ms = phase_latency(PhaseKind::Access, config, table[PhaseKind::Access]).total_ms;
    r.publish_total_ms =
        phase_latency(PhaseKind::Publish, config, table[PhaseKind::Publish]).total_ms;

    const CoefficientVector& access = table[PhaseKind::Access];
    for (std::size_t i = 0; i < kTimingEntryCount; ++i) {
        TimingEntry e = entry_at(i);
        if (!is_link_entry(e)) r.access_processing_ms += access[e] * config[e];
    }

    auto ratio = [](std::int64_t num, std::int64_t den) {
        return den == 0 ? std::numeric_limits<double>::quiet_NaN()
                        : static_cast<double>(num) / static_cast<double>(den);
    };
    r.subscribe_vs_publish = ratio(r.subscribe_total_ms, r.publish_total_ms);
    r.access_vs_publish = ratio(r.access_total_ms, r.publish_total_ms);
    r.subscribe_vs_subscribe_plus_access =
        ratio(r.subscribe_total_ms, r.subscribe_total_ms + r.access_total_ms);
    r.access_processing_vs_publish = ratio(r.access_processing_ms, r.publish_total_ms);
    return r;
}

namespace {

std::int64_t require_nonneg_int(const nlohmann::json& value, const std::string& key) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw ConfigError("'" + key + "' must be a non-negative integer");
    }
    return value.get<std::int64_t>();
}

}  // namespace

TimingSpec parse_timing_spec(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be an object");

    TimingSpec spec;
    for (const auto& [key, value] : doc.items()) {
        if (key == "coefficients") {
            if (!value.is_object()) throw ConfigError("'coefficients' must be an object");
            for (const auto& [phase_key, overrides] : value.items()) {
                auto phase = parse_phase(phase_key);
                if (!phase) throw ConfigError("unknown phase '" + phase_key + "'");
                if (!overrides.is_object()) {
                    throw ConfigError("coefficients for '" + phase_key + "' must be an object");
                }
                for (const auto& [entry_key, count] : overrides.items()) {
                    auto entry = parse_timing_entry(entry_key);
                    if (!entry) throw ConfigError("unknown timing symbol '" + entry_key + "'");
                    spec.coefficients[*phase][*entry] = require_nonneg_int(count, entry_key);
                }
            }
            continue;
        }
        auto entry = parse_timing_entry(key);
        if (!entry) throw ConfigError("unknown timing symbol '" + key + "'");
        spec.config[*entry] = require_nonneg_int(value, key);
    }
    spec.config.validate();
    return spec;
}

TimingSpec load_timing_spec(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ConfigError("cannot open config file '" + file.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_timing_spec(buf.str());
}

}  // namespace mquma

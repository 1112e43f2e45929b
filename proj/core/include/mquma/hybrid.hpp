#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mquma/broker.hpp"
#include "mquma/message.hpp"
#include "mquma/roles.hpp"
#include "mquma/uma.hpp"

namespace mquma {

/// The five timed flows of the hybrid protocol.
enum class PhaseKind : std::uint8_t {
    ProtectionAuthorization,
    Access,
    InitialPublish,
    Publish,
    Subscribe,
};

inline constexpr std::size_t kPhaseCount = 5;
inline constexpr std::array<PhaseKind, kPhaseCount> kAllPhases = {
    PhaseKind::ProtectionAuthorization, PhaseKind::Access, PhaseKind::InitialPublish,
    PhaseKind::Publish, PhaseKind::Subscribe,
};

std::string_view phase_name(PhaseKind phase);
std::optional<PhaseKind> parse_phase(std::string_view name);

enum class LinkClass : std::uint8_t { ZigbeeLocal, InterRegion, IntraFog };

/// The six nodes and the links between them. Notably there is no direct
/// link between MB1/P2/RO and S2/RP: everything the requesting party
/// sees travels through the fog layer.
struct HybridTopology {
    struct Link {
        NodeRole a;
        NodeRole b;
        LinkClass cls;
    };

    std::vector<Link> links;

    const Link* find(NodeRole x, NodeRole y) const;
    bool connected(NodeRole x, NodeRole y) const { return find(x, y) != nullptr; }

    static HybridTopology canonical();
};

/// One row of the MQTT<->UMA role mapping table. A missing side means
/// the role has no counterpart in the other protocol.
struct RoleMapRow {
    std::optional<std::string> mqtt;
    std::optional<std::string> uma;
};

const std::vector<RoleMapRow>& role_map();
std::optional<std::string> uma_for_mqtt(std::string_view mqtt_role);
std::optional<std::string> mqtt_for_uma(std::string_view uma_role);

/// Parameters for one flow run.
struct FlowOptions {
    ResourceId resource = "R";
    ClientId client = "client-1";
    std::string value;  // empty -> generated reading
    // ProtectionAuthorization only: nullopt allows just the acting
    // client, an explicit empty list denies everyone.
    std::optional<std::vector<ClientId>> policy;
};

/// The combined system: MB1's broker, MB2's broker (the resource
/// server), the UMA engine, and the RPT-gated subscriber records at MB2.
///
/// Construction opens the sessions the charts never show as timed
/// arrows: P1 and the bridge at MB1, the client at MB2. Flow execution
/// is single-threaded and deterministic.
class HybridSystem {
public:
    struct Subscription {
        ClientId client;
        std::optional<TokenId> rpt;
        NodeRole subscriber = NodeRole::S2Rp;
    };

    explicit HybridSystem(HybridTopology topology = HybridTopology::canonical());

    /// Runs one named flow, returning its transcript. Side effects update
    /// broker and registry state. Throws PrerequisiteMissing when the
    /// phase's prerequisites are not met.
    FlowTranscript run_flow(PhaseKind phase, const FlowOptions& options = {});

    /// RS-side push: for every subscriber record of the topic, one
    /// IsValid round-trip; holders of a currently-valid RPT get the new
    /// value relayed RS -> Client -> S2/RP. Returns the subscriber-bound
    /// delivery messages. The client-initiated Access path is never run
    /// here.
    std::vector<ProtocolMessage> notify_subscribers_on_publish(const ResourceId& topic,
                                                               FlowTranscript& t);

    const HybridTopology& topology() const { return topology_; }
    BrokerState& mb1() { return mb1_; }
    BrokerState& mb2() { return mb2_; }
    UmaEngine& uma() { return uma_; }
    const UmaEngine& uma() const { return uma_; }
    const std::vector<Subscription>& subscriptions(const ResourceId& topic) const;

    bool protection_authorized(const ResourceId& resource) const;
    bool initial_published(const ResourceId& resource) const;

private:
    void ensure_bridge(const ResourceId& topic);
    void publish_upstream(const ResourceId& topic, const std::string& value, FlowTranscript& t);
    std::string next_value(const FlowOptions& options);

    HybridTopology topology_;
    BrokerState mb1_{NodeRole::Mb1P2Ro};
    BrokerState mb2_{NodeRole::S1Mb2Rs};
    UmaEngine uma_;
    std::map<ResourceId, std::vector<Subscription>> subscriptions_;
    std::set<ResourceId> protection_authorized_;
    std::set<ResourceId> initial_published_;
    std::uint64_t reading_counter_ = 0;
};

}  // namespace mquma

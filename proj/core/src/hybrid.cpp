#include "mquma/hybrid.hpp"

#include <algorithm>

#include "mquma/errors.hpp"

namespace mquma {

namespace {
constexpr NodeRole kP1 = NodeRole::P1;
constexpr NodeRole kMb1 = NodeRole::Mb1P2Ro;
constexpr NodeRole kRs = NodeRole::S1Mb2Rs;
constexpr NodeRole kAs = NodeRole::AuthServer;
constexpr NodeRole kClient = NodeRole::Client;
constexpr NodeRole kS2 = NodeRole::S2Rp;
}  // namespace

std::string_view phase_name(PhaseKind phase) {
    switch (phase) {
        case PhaseKind::ProtectionAuthorization: return "ProtectionAuthorization";
        case PhaseKind::Access: return "Access";
        case PhaseKind::InitialPublish: return "InitialPublish";
        case PhaseKind::Publish: return "Publish";
        case PhaseKind::Subscribe: return "Subscribe";
    }
    return "?";
}

std::optional<PhaseKind> parse_phase(std::string_view name) {
    for (PhaseKind p : kAllPhases) {
        if (phase_name(p) == name) return p;
    }
    return std::nullopt;
}

const HybridTopology::Link* HybridTopology::find(NodeRole x, NodeRole y) const {
    for (const Link& l : links) {
        if ((l.a == x && l.b == y) || (l.a == y && l.b == x)) return &l;
    }
    return nullptr;
}

HybridTopology HybridTopology::canonical() {
    HybridTopology t;
    t.links = {
        {kP1, kMb1, LinkClass::ZigbeeLocal},
        {kMb1, kRs, LinkClass::InterRegion},
        {kRs, kAs, LinkClass::IntraFog},
        {kClient, kRs, LinkClass::IntraFog},
        {kClient, kAs, LinkClass::IntraFog},
        {kS2, kClient, LinkClass::InterRegion},
    };
    return t;
}

const std::vector<RoleMapRow>& role_map() {
    static const std::vector<RoleMapRow> kRows = {
        {"P1", std::nullopt},
        {"MB1/P2", "RO"},
        {"S1/MB2", "RS"},
        {std::nullopt, "AS"},
        {"S2", "RP"},
        {std::nullopt, "Client"},
        {"topic/subject", "R"},
    };
    return kRows;
}

std::optional<std::string> uma_for_mqtt(std::string_view mqtt_role) {
    for (const RoleMapRow& row : role_map()) {
        if (row.mqtt && *row.mqtt == mqtt_role) return row.uma;
    }
    return std::nullopt;
}

std::optional<std::string> mqtt_for_uma(std::string_view uma_role) {
    for (const RoleMapRow& row : role_map()) {
        if (row.uma && *row.uma == uma_role) return row.mqtt;
    }
    return std::nullopt;
}

HybridSystem::HybridSystem(HybridTopology topology) : topology_(std::move(topology)) {
    // One-time sessions outside any timed phase.
    mb1_.open_session(kP1);
    mb1_.open_session(kRs);  // bridge endpoint: MB2 acts as S1 at MB1
    mb2_.open_session(kClient);
}

void HybridSystem::ensure_bridge(const ResourceId& topic) {
    // Bridge-all: MB2 receives every topic MB1 publishes, with no
    // per-topic subscribe arrow on the wire.
    mb1_.add_subscription(kRs, topic);
}

void HybridSystem::publish_upstream(const ResourceId& topic, const std::string& value,
                                    FlowTranscript& t) {
    ensure_bridge(topic);
    t.send(kP1, kMb1, MessageKind::Publish, {.resource = topic});
    mb1_.publish({topic, value, kP1}, t);       // fans out to the bridge: MB1 -> MB2
    mb2_.publish({topic, value, kMb1});         // RS ingests; gated fan-out is separate
}

std::string HybridSystem::next_value(const FlowOptions& options) {
    if (!options.value.empty()) return options.value;
    return "reading-" + std::to_string(++reading_counter_);
}

FlowTranscript HybridSystem::run_flow(PhaseKind phase, const FlowOptions& options) {
    const ResourceId& r = options.resource;
    FlowTranscript t(std::string(phase_name(phase)));

    switch (phase) {
        case PhaseKind::ProtectionAuthorization: {
            std::vector<ClientId> policy =
                options.policy ? *options.policy : std::vector<ClientId>{options.client};
            mb2_.connect(kMb1, t);
            publish_upstream(r, next_value(options), t);
            TokenId pat = uma_.protect(r, std::move(policy));
            t.send(kRs, kAs, MessageKind::GetPat, {.resource = r});
            t.send(kAs, kRs, MessageKind::PatResponse,
                   {.resource = r, .token = pat, .status = ReplyStatus::Ok});
            uma_.authorize_band(t, options.client, r);
            protection_authorized_.insert(r);
            break;
        }
        case PhaseKind::Subscribe: {
            if (!uma_.is_protected(r)) {
                throw PrerequisiteMissing("Subscribe needs a protected resource");
            }
            t.send(kS2, kClient, MessageKind::Subscribe, {.resource = r});
            t.send(kClient, kRs, MessageKind::Subscribe, {.resource = r});
            auto& subs = subscriptions_[r];
            auto it = std::find_if(subs.begin(), subs.end(), [&](const Subscription& s) {
                return s.client == options.client;
            });
            if (it == subs.end()) {
                subs.push_back({options.client, uma_.rpt_of(options.client, r), kS2});
            } else {
                it->rpt = uma_.rpt_of(options.client, r);
            }
            break;
        }
        case PhaseKind::InitialPublish: {
            mb2_.connect(kMb1, t);
            publish_upstream(r, next_value(options), t);
            if (!uma_.is_protected(r)) uma_.protect(r, {});
            t.send(kRs, kAs, MessageKind::GetPat, {.resource = r});
            t.send(kAs, kRs, MessageKind::PatResponse,
                   {.resource = r, .token = *uma_.pat_for(r), .status = ReplyStatus::Ok});
            initial_published_.insert(r);
            break;
        }
        case PhaseKind::Access: {
            if (!protection_authorized_.count(r)) {
                throw PrerequisiteMissing("Access needs ProtectionAuthorization first");
            }
            TokenId rpt = uma_.rpt_of(options.client, r).value_or(0);
            auto result = uma_.phase3_access(options.client, r, rpt, mb2_.last_value(r));
            t.messages = std::move(result.transcript.messages);
            t.steps = std::move(result.transcript.steps);
            break;
        }
        case PhaseKind::Publish: {
            if (!initial_published_.count(r)) {
                throw PrerequisiteMissing("Publish needs InitialPublish first");
            }
            publish_upstream(r, next_value(options), t);
            notify_subscribers_on_publish(r, t);
            break;
        }
    }
    return t;
}

std::vector<ProtocolMessage> HybridSystem::notify_subscribers_on_publish(const ResourceId& topic,
                                                                         FlowTranscript& t) {
    std::vector<ProtocolMessage> deliveries;
    auto it = subscriptions_.find(topic);
    if (it == subscriptions_.end()) return deliveries;

    for (const Subscription& sub : it->second) {
        TokenId rpt = sub.rpt.value_or(0);
        t.send(kRs, kAs, MessageKind::IsValid, {.resource = topic, .token = rpt});
        Verdict v = uma_.registry().validate(rpt, topic);
        t.send(kAs, kRs, MessageKind::IsValidReply,
               {.resource = topic,
                .token = rpt,
                .status = v.ok ? ReplyStatus::Ok : ReplyStatus::Forbidden403});
        if (!v.ok) continue;
        t.send(kRs, kClient, MessageKind::Publish, {.resource = topic});
        deliveries.push_back(
            t.send(kClient, sub.subscriber, MessageKind::Publish, {.resource = topic}));
    }
    return deliveries;
}

const std::vector<HybridSystem::Subscription>& HybridSystem::subscriptions(
    const ResourceId& topic) const {
    static const std::vector<Subscription> kNone;
    auto it = subscriptions_.find(topic);
    return it == subscriptions_.end() ? kNone : it->second;
}

bool HybridSystem::protection_authorized(const ResourceId& resource) const {
    return protection_authorized_.count(resource) != 0;
}

bool HybridSystem::initial_published(const ResourceId& resource) const {
    return initial_published_.count(resource) != 0;
}

}  // namespace mquma

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mquma/message.hpp"
#include "mquma/roles.hpp"

namespace mquma {

/// One publication as it arrives at a broker.
struct PublishEvent {
    ResourceId topic;
    std::string value;  // raw payload bytes
    NodeRole source = NodeRole::P1;
};

struct BrokerLogEntry {
    ResourceId topic;
    std::string value;
    std::uint64_t logical_time = 0;
};

/// Minimal QoS-0 broker: sessions, exact-name topic subscriptions,
/// publish fan-out, retained last values and an append-only log.
/// Topics auto-create on first subscribe or publish. Mutations are
/// single-threaded; reads of a quiescent broker are safe to share.
class BrokerState {
public:
    /// Zigbee frame bound on publish payloads.
    static constexpr std::size_t kMaxPayloadBytes = 127;

    explicit BrokerState(NodeRole broker_role) : role_(broker_role) {}

    NodeRole role() const { return role_; }

    /// Session bookkeeping without transcript arrows (topology setup).
    void open_session(NodeRole client);

    /// Connect handshake: appends Connect and ConnAck arrows. A second
    /// connect replaces the session and leaves subscriptions untouched.
    void connect(NodeRole client, FlowTranscript& t);

    bool has_session(NodeRole client) const;

    /// Adds the client to the topic's subscriber set (no arrows).
    /// Throws NotConnected without a session. Duplicate subscribes are
    /// no-ops: a subscriber appears at most once per topic.
    void add_subscription(NodeRole client, const ResourceId& topic);

    /// add_subscription plus the Subscribe arrow.
    void subscribe(NodeRole client, const ResourceId& topic, FlowTranscript& t);

    /// Delivers one Publish message per current subscriber of the topic,
    /// updates the retained value and the log. Returns copies of the
    /// delivery messages appended to the transcript.
    /// Throws PayloadTooLarge above kMaxPayloadBytes.
    std::vector<ProtocolMessage> publish(const PublishEvent& event, FlowTranscript& t);

    /// publish() into a scratch transcript.
    std::vector<ProtocolMessage> publish(const PublishEvent& event);

    std::optional<std::string> last_value(const ResourceId& topic) const;

    const std::vector<NodeRole>& subscribers(const ResourceId& topic) const;
    const std::vector<BrokerLogEntry>& log() const { return log_; }

private:
    NodeRole role_;
    std::vector<NodeRole> sessions_;
    std::map<ResourceId, std::vector<NodeRole>> subscriptions_;  // insertion order kept
    std::map<ResourceId, std::string> retained_;
    std::vector<BrokerLogEntry> log_;
    std::uint64_t clock_ = 0;
};

}  // namespace mquma

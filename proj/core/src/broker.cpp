#include "mquma/broker.hpp"

#include <algorithm>

#include "mquma/errors.hpp"

namespace mquma {

void BrokerState::open_session(NodeRole client) {
    if (!has_session(client)) sessions_.push_back(client);
}

void BrokerState::connect(NodeRole client, FlowTranscript& t) {
    open_session(client);
    t.send(client, role_, MessageKind::Connect);
    t.send(role_, client, MessageKind::ConnAck, {.status = ReplyStatus::Ok});
}

bool BrokerState::has_session(NodeRole client) const {
    return std::find(sessions_.begin(), sessions_.end(), client) != sessions_.end();
}

void BrokerState::add_subscription(NodeRole client, const ResourceId& topic) {
    if (!has_session(client)) {
        throw NotConnected(std::string(role_name(client)) + " has no session at " +
                           std::string(role_name(role_)));
    }
    auto& subs = subscriptions_[topic];
    if (std::find(subs.begin(), subs.end(), client) == subs.end()) subs.push_back(client);
}

void BrokerState::subscribe(NodeRole client, const ResourceId& topic, FlowTranscript& t) {
    add_subscription(client, topic);
    t.send(client, role_, MessageKind::Subscribe, {.resource = topic});
}

std::vector<ProtocolMessage> BrokerState::publish(const PublishEvent& event, FlowTranscript& t) {
    if (event.value.size() > kMaxPayloadBytes) {
        throw PayloadTooLarge("payload of " + std::to_string(event.value.size()) +
                              " bytes exceeds " + std::to_string(kMaxPayloadBytes));
    }
    retained_[event.topic] = event.value;
    log_.push_back({event.topic, event.value, clock_++});

    std::vector<ProtocolMessage> deliveries;
    for (NodeRole sub : subscribers(event.topic)) {
        deliveries.push_back(t.send(role_, sub, MessageKind::Publish, {.resource = event.topic}));
    }
    return deliveries;
}

std::vector<ProtocolMessage> BrokerState::publish(const PublishEvent& event) {
    FlowTranscript scratch;
    return publish(event, scratch);
}

std::optional<std::string> BrokerState::last_value(const ResourceId& topic) const {
    auto it = retained_.find(topic);
    if (it == retained_.end()) return std::nullopt;
    return it->second;
}

const std::vector<NodeRole>& BrokerState::subscribers(const ResourceId& topic) const {
    static const std::vector<NodeRole> kNone;
    auto it = subscriptions_.find(topic);
    return it == subscriptions_.end() ? kNone : it->second;
}

}  // namespace mquma

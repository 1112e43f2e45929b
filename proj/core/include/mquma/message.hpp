#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mquma/roles.hpp"
#include "mquma/token.hpp"

namespace mquma {

enum class ReplyStatus : std::uint16_t {
    Ok = 200,
    Unauthorized401 = 401,
    Forbidden403 = 403,
};

std::string_view reply_status_name(ReplyStatus status);

/// One arrow of a sequence chart.
struct ProtocolMessage {
    std::uint32_t seq = 0;  // strictly increasing within a transcript
    NodeRole from = NodeRole::Client;
    NodeRole to = NodeRole::Client;
    MessageKind kind = MessageKind::Publish;
    std::optional<ResourceId> resource;
    std::optional<TokenId> token;
    std::optional<ReplyStatus> status;  // reply kinds only
};

/// A node doing local work (database access, validation, dispatch).
struct ProcessingStep {
    NodeRole at = NodeRole::Client;
};

/// Ordered arrows plus per-node processing steps for one protocol phase.
class FlowTranscript {
public:
    struct MsgOpts {
        std::optional<ResourceId> resource;
        std::optional<TokenId> token;
        std::optional<ReplyStatus> status;
    };

    FlowTranscript() = default;
    explicit FlowTranscript(std::string label) : label(std::move(label)) {}

    /// Appends an arrow and a processing step at the receiver.
    ProtocolMessage& send(NodeRole from, NodeRole to, MessageKind kind, MsgOpts opts = {});

    /// Appends an arrow only. Throws std::logic_error when a status is
    /// attached to a non-reply kind.
    ProtocolMessage& message(NodeRole from, NodeRole to, MessageKind kind, MsgOpts opts = {});

    void process(NodeRole at) { steps.push_back({at}); }

    bool empty() const { return messages.empty() && steps.empty(); }

    std::string label;
    std::vector<ProtocolMessage> messages;
    std::vector<ProcessingStep> steps;
};

/// One JSON object per message: seq, from, to, kind, resource, status.
std::string to_json_line(const ProtocolMessage& msg);

}  // namespace mquma

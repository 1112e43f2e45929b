#include "mquma/message.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mquma {

std::string_view reply_status_name(ReplyStatus status) {
    switch (status) {
        case ReplyStatus::Ok: return "OK";
        case ReplyStatus::Unauthorized401: return "401";
        case ReplyStatus::Forbidden403: return "403";
    }
    return "?";
}

ProtocolMessage& FlowTranscript::message(NodeRole from, NodeRole to, MessageKind kind,
                                         MsgOpts opts) {
    if (opts.status && !is_reply_kind(kind)) {
        throw std::logic_error(std::string("status on non-reply kind ") +
                               std::string(kind_name(kind)));
    }
    ProtocolMessage m;
    m.seq = static_cast<std::uint32_t>(messages.size() + 1);
    m.from = from;
    m.to = to;
    m.kind = kind;
    m.resource = std::move(opts.resource);
    m.token = opts.token;
    m.status = opts.status;
    messages.push_back(std::move(m));
    return messages.back();
}

ProtocolMessage& FlowTranscript::send(NodeRole from, NodeRole to, MessageKind kind, MsgOpts opts) {
    ProtocolMessage& m = message(from, to, kind, std::move(opts));
    process(to);
    return m;
}

std::string to_json_line(const ProtocolMessage& msg) {
    nlohmann::ordered_json j;
    j["seq"] = msg.seq;
    j["from"] = role_name(msg.from);
    j["to"] = role_name(msg.to);
    j["kind"] = kind_name(msg.kind);
    if (msg.resource) j["resource"] = *msg.resource;
    if (msg.status) j["status"] = reply_status_name(*msg.status);
    return j.dump();
}

}  // namespace mquma

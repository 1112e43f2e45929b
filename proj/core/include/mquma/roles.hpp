#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace mquma {

/// The six nodes of the hybrid topology. The three composite roles
/// (Mb1P2Ro, S1Mb2Rs, S2Rp) are single nodes that carry several protocol
/// hats at once and are never split.
enum class NodeRole : std::uint8_t {
    P1,        // IoT publisher device
    Mb1P2Ro,   // first broker / second publisher / resource owner
    S1Mb2Rs,   // first subscriber / second broker / resource server
    AuthServer,
    Client,
    S2Rp,      // second subscriber / requesting party
};

inline constexpr std::array<NodeRole, 6> kAllRoles = {
    NodeRole::P1,     NodeRole::Mb1P2Ro, NodeRole::S1Mb2Rs,
    NodeRole::AuthServer, NodeRole::Client,  NodeRole::S2Rp,
};

std::string_view role_name(NodeRole role);
std::optional<NodeRole> parse_role(std::string_view name);

/// One kind per distinct arrow label across the sequence charts.
enum class MessageKind : std::uint8_t {
    Connect,
    ConnAck,
    Publish,
    Subscribe,
    LoginRegister,
    GetPat,
    PatResponse,
    GetResource,
    UnauthorizedWithEndpoint,
    RegisterClient,
    AatResponse,
    GetRpt,
    RptResponse,
    AccessResource,
    IsValid,
    IsValidReply,
    SetPermission,
    PermissionTicketResponse,
    ForbiddenWithTicket,
    ResourceResponse,
};

std::string_view kind_name(MessageKind kind);

/// Reply kinds are the only messages allowed to carry a status.
bool is_reply_kind(MessageKind kind);

/// A topic in MQTT and a resource R in UMA are the same identifier.
using ResourceId = std::string;

/// Identity a client presents when registering with the authorization
/// server; policy allow-lists are sets of these.
using ClientId = std::string;

}  // namespace mquma

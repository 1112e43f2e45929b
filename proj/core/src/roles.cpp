#include "mquma/roles.hpp"

namespace mquma {

std::string_view role_name(NodeRole role) {
    switch (role) {
        case NodeRole::P1: return "P1";
        case NodeRole::Mb1P2Ro: return "MB1/P2/RO";
        case NodeRole::S1Mb2Rs: return "S1/MB2/RS";
        case NodeRole::AuthServer: return "AS";
        case NodeRole::Client: return "Client";
        case NodeRole::S2Rp: return "S2/RP";
    }
    return "?";
}

std::optional<NodeRole> parse_role(std::string_view name) {
    for (NodeRole r : kAllRoles) {
        if (role_name(r) == name) return r;
    }
    return std::nullopt;
}

std::string_view kind_name(MessageKind kind) {
    switch (kind) {
        case MessageKind::Connect: return "Connect";
        case MessageKind::ConnAck: return "ConnAck";
        case MessageKind::Publish: return "Publish";
        case MessageKind::Subscribe: return "Subscribe";
        case MessageKind::LoginRegister: return "LoginRegister";
        case MessageKind::GetPat: return "GetPAT";
        case MessageKind::PatResponse: return "PATResponse";
        case MessageKind::GetResource: return "GetResource";
        case MessageKind::UnauthorizedWithEndpoint: return "UnauthorizedWithEndpoint";
        case MessageKind::RegisterClient: return "RegisterClient";
        case MessageKind::AatResponse: return "AATResponse";
        case MessageKind::GetRpt: return "GetRPT";
        case MessageKind::RptResponse: return "RPTResponse";
        case MessageKind::AccessResource: return "AccessResource";
        case MessageKind::IsValid: return "IsValid";
        case MessageKind::IsValidReply: return "IsValidReply";
        case MessageKind::SetPermission: return "SetPermission";
        case MessageKind::PermissionTicketResponse: return "PermissionTicketResponse";
        case MessageKind::ForbiddenWithTicket: return "ForbiddenWithTicket";
        case MessageKind::ResourceResponse: return "ResourceResponse";
    }
    return "?";
}

bool is_reply_kind(MessageKind kind) {
    switch (kind) {
        case MessageKind::ConnAck:
        case MessageKind::PatResponse:
        case MessageKind::UnauthorizedWithEndpoint:
        case MessageKind::AatResponse:
        case MessageKind::RptResponse:
        case MessageKind::IsValidReply:
        case MessageKind::PermissionTicketResponse:
        case MessageKind::ForbiddenWithTicket:
        case MessageKind::ResourceResponse:
            return true;
        default:
            return false;
    }
}

}  // namespace mquma

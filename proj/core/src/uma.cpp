#include "mquma/uma.hpp"

#include <algorithm>
#include <stdexcept>

#include "mquma/errors.hpp"

namespace mquma {

namespace {
constexpr NodeRole kRo = NodeRole::Mb1P2Ro;
constexpr NodeRole kRs = NodeRole::S1Mb2Rs;
constexpr NodeRole kAs = NodeRole::AuthServer;
constexpr NodeRole kClient = NodeRole::Client;

ReplyStatus yes_no(const Verdict& v) {
    return v.ok ? ReplyStatus::Ok : ReplyStatus::Forbidden403;
}
}  // namespace

TokenId UmaEngine::protect(const ResourceId& resource, std::vector<ClientId> allow_list) {
    if (resource.empty()) throw std::invalid_argument("empty resource id");
    if (is_protected(resource)) {
        throw AlreadyProtected("resource '" + resource + "' already has a live PAT");
    }
    const Token& pat = registry_.mint(TokenKind::Pat, kRs, resource);
    protections_[resource] = Protection{pat.id, std::move(allow_list)};
    return pat.id;
}

FlowTranscript UmaEngine::phase1_protect(NodeRole owner, const ResourceId& resource,
                                         std::vector<ClientId> allow_list) {
    if (owner != kRo) {
        throw std::invalid_argument("phase 1 is initiated by the resource owner node");
    }
    TokenId pat = protect(resource, std::move(allow_list));

    FlowTranscript t("Protection");
    t.send(kRo, kRs, MessageKind::LoginRegister, {.resource = resource});
    t.send(kRs, kAs, MessageKind::GetPat, {.resource = resource});
    t.send(kAs, kRs, MessageKind::PatResponse,
           {.resource = resource, .token = pat, .status = ReplyStatus::Ok});
    return t;
}

FlowTranscript UmaEngine::phase2_authorize(const ClientId& client, const ResourceId& resource) {
    FlowTranscript t("Authorization");
    authorize_band(t, client, resource);
    return t;
}

void UmaEngine::authorize_band(FlowTranscript& t, const ClientId& client,
                               const ResourceId& resource) {
    if (!is_protected(resource)) {
        throw NotProtected("resource '" + resource + "' has no protection in place");
    }

    t.send(kClient, kRs, MessageKind::GetResource, {.resource = resource});
    t.send(kRs, kClient, MessageKind::UnauthorizedWithEndpoint,
           {.resource = resource, .status = ReplyStatus::Unauthorized401});

    t.send(kClient, kAs, MessageKind::RegisterClient);
    TokenId aat = aat_for(client, resource);
    t.send(kAs, kClient, MessageKind::AatResponse, {.token = aat, .status = ReplyStatus::Ok});

    t.send(kClient, kAs, MessageKind::GetRpt, {.resource = resource, .token = aat});
    TokenId rpt = registry_.mint(TokenKind::Rpt, kClient, resource).id;
    clients_[client].rpt[resource] = rpt;
    t.send(kAs, kClient, MessageKind::RptResponse, {.token = rpt, .status = ReplyStatus::Ok});

    // First access attempt with the pre-permission RPT; the validity
    // check is answered from the registry, not scripted.
    t.send(kClient, kRs, MessageKind::AccessResource, {.resource = resource, .token = rpt});
    t.send(kRs, kAs, MessageKind::IsValid, {.resource = resource, .token = rpt});
    t.send(kAs, kRs, MessageKind::IsValidReply,
           {.resource = resource, .token = rpt, .status = yes_no(registry_.validate(rpt, resource))});

    t.send(kRs, kAs, MessageKind::SetPermission, {.resource = resource});
    TokenId ticket = registry_.mint(TokenKind::PermissionTicket, kClient, resource).id;
    t.send(kAs, kRs, MessageKind::PermissionTicketResponse,
           {.token = ticket, .status = ReplyStatus::Ok});
    t.send(kRs, kClient, MessageKind::ForbiddenWithTicket,
           {.resource = resource, .token = ticket, .status = ReplyStatus::Forbidden403});

    // Ticket exchange: upgrade succeeds only for allow-listed clients,
    // and the ticket is consumed by the one successful use.
    t.send(kClient, kAs, MessageKind::GetRpt, {.resource = resource, .token = ticket});
    if (client_allowed(client, resource) && registry_.consume(ticket)) {
        registry_.authorize(rpt);
    }
    t.send(kAs, kClient, MessageKind::RptResponse, {.token = rpt, .status = ReplyStatus::Ok});
}

UmaEngine::AccessResult UmaEngine::phase3_access(const ClientId&, const ResourceId& resource,
                                                 TokenId rpt,
                                                 std::optional<std::string> current_value) {
    FlowTranscript t("Access");
    t.send(kClient, kRs, MessageKind::AccessResource, {.resource = resource, .token = rpt});
    t.send(kRs, kAs, MessageKind::IsValid, {.resource = resource, .token = rpt});
    Verdict v = registry_.validate(rpt, resource);
    t.send(kAs, kRs, MessageKind::IsValidReply,
           {.resource = resource, .token = rpt, .status = yes_no(v)});

    if (v.ok) {
        t.send(kRs, kClient, MessageKind::ResourceResponse,
               {.resource = resource, .token = rpt, .status = ReplyStatus::Ok});
        return {std::move(t), std::move(current_value)};
    }

    t.send(kRs, kAs, MessageKind::SetPermission, {.resource = resource});
    TokenId ticket = registry_.mint(TokenKind::PermissionTicket, kClient, resource).id;
    t.send(kAs, kRs, MessageKind::PermissionTicketResponse,
           {.token = ticket, .status = ReplyStatus::Ok});
    t.send(kRs, kClient, MessageKind::ForbiddenWithTicket,
           {.resource = resource, .token = ticket, .status = ReplyStatus::Forbidden403});
    return {std::move(t), std::nullopt};
}

bool UmaEngine::is_protected(const ResourceId& resource) const {
    return protections_.count(resource) != 0;
}

std::optional<TokenId> UmaEngine::pat_for(const ResourceId& resource) const {
    auto it = protections_.find(resource);
    if (it == protections_.end()) return std::nullopt;
    return it->second.pat;
}

std::optional<TokenId> UmaEngine::rpt_of(const ClientId& client, const ResourceId& resource) const {
    auto it = clients_.find(client);
    if (it == clients_.end()) return std::nullopt;
    auto jt = it->second.rpt.find(resource);
    if (jt == it->second.rpt.end()) return std::nullopt;
    return jt->second;
}

bool UmaEngine::client_allowed(const ClientId& client, const ResourceId& resource) const {
    auto it = protections_.find(resource);
    if (it == protections_.end()) return false;
    const auto& allow = it->second.allow_list;
    return std::find(allow.begin(), allow.end(), client) != allow.end();
}

TokenId UmaEngine::aat_for(const ClientId& client, const ResourceId& resource) {
    auto& creds = clients_[client];
    auto it = creds.aat.find(resource);
    if (it != creds.aat.end()) return it->second;
    TokenId aat = registry_.mint(TokenKind::Aat, kClient, resource).id;
    creds.aat[resource] = aat;
    return aat;
}

}  // namespace mquma

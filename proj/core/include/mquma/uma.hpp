#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mquma/message.hpp"
#include "mquma/roles.hpp"
#include "mquma/token.hpp"

namespace mquma {

/// The three UMA phases (protect, authorize, access) as a deterministic
/// sequence generator over the entity state it owns: the token registry,
/// per-resource protection records and per-client credentials.
///
/// Policy conditions are modeled as an allow-list of client identities
/// per resource. Flow generation is pure given a state snapshot; all
/// mutation happens through these entry points and must be externally
/// serialized.
class UmaEngine {
public:
    struct AccessResult {
        FlowTranscript transcript;
        std::optional<std::string> payload;  // set only on a granted access
    };

    /// State-level protection: mints the PAT and records the policy.
    /// Throws AlreadyProtected when the resource already has a live PAT.
    TokenId protect(const ResourceId& resource, std::vector<ClientId> allow_list);

    /// Phase 1 as the resource owner initiates it:
    ///   LoginRegister RO->RS, GetPAT RS->AS, PATResponse AS->RS.
    /// The owner must be the MB1/P2/RO node.
    FlowTranscript phase1_protect(NodeRole owner, const ResourceId& resource,
                                  std::vector<ClientId> allow_list);

    /// Phase 2: the full authorization band, ending with the RPT upgrade
    /// attempt. The final RPT is Authorized iff the client is on the
    /// resource's allow-list. Throws NotProtected.
    FlowTranscript phase2_authorize(const ClientId& client, const ResourceId& resource);

    /// Appends the phase-2 arrows to an existing transcript (used by the
    /// hybrid flows, which embed the band after the MQTT setup arrows).
    void authorize_band(FlowTranscript& t, const ClientId& client, const ResourceId& resource);

    /// Phase 3: token-checked access. A valid RPT yields a
    /// ResourceResponse carrying current_value; anything else yields the
    /// forbidden path with a fresh permission ticket. Denial is a
    /// transcript, not an error.
    AccessResult phase3_access(const ClientId& client, const ResourceId& resource, TokenId rpt,
                               std::optional<std::string> current_value);

    bool is_protected(const ResourceId& resource) const;
    std::optional<TokenId> pat_for(const ResourceId& resource) const;
    std::optional<TokenId> rpt_of(const ClientId& client, const ResourceId& resource) const;
    bool client_allowed(const ClientId& client, const ResourceId& resource) const;

    TokenRegistry& registry() { return registry_; }
    const TokenRegistry& registry() const { return registry_; }

private:
    struct Protection {
        TokenId pat = 0;
        std::vector<ClientId> allow_list;
    };
    struct Credentials {
        std::map<ResourceId, TokenId> aat;
        std::map<ResourceId, TokenId> rpt;
    };

    TokenId aat_for(const ClientId& client, const ResourceId& resource);

    TokenRegistry registry_;
    std::map<ResourceId, Protection> protections_;
    std::map<ClientId, Credentials> clients_;
};

}  // namespace mquma

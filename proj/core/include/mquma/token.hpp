#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mquma/roles.hpp"

namespace mquma {

enum class TokenKind : std::uint8_t { Pat, Aat, Rpt, PermissionTicket };
enum class TokenState : std::uint8_t { Issued, Authorized, Revoked, Consumed };

std::string_view token_kind_name(TokenKind kind);
std::string_view token_state_name(TokenState state);

using TokenId = std::uint64_t;

/// Opaque credential. Tokens are plain values; the registry owns the
/// authoritative state.
struct Token {
    TokenId id = 0;
    TokenKind kind = TokenKind::Rpt;
    NodeRole issuer = NodeRole::AuthServer;
    NodeRole holder = NodeRole::Client;
    ResourceId scope;
    TokenState state = TokenState::Issued;
};

enum class Invalidity : std::uint8_t {
    UnknownToken,
    ScopeMismatch,
    NotYetPermissioned,  // RPT issued but no permission granted yet
    Revoked,
    Consumed,
};

std::string_view invalidity_name(Invalidity reason);

/// Outcome of a validity check. Denial is a verdict, not an error.
struct Verdict {
    bool ok = false;
    std::optional<Invalidity> reason;

    static Verdict valid() { return {true, std::nullopt}; }
    static Verdict invalid(Invalidity why) { return {false, why}; }
    explicit operator bool() const { return ok; }
};

/// Server-side token store. Single-writer: mutations must be externally
/// serialized, concurrent reads of a quiescent registry are safe.
///
/// Legal state transitions:
///   Issued -> Authorized   (RPT only, permission upgrade)
///   Issued -> Consumed     (PermissionTicket only, single use)
///   any    -> Revoked
class TokenRegistry {
public:
    /// Mints a token in state Issued with a registry-unique id.
    /// Throws IllegalHolder when the kind/holder pair is not allowed.
    const Token& mint(TokenKind kind, NodeRole holder, const ResourceId& scope);

    /// Pure check: token exists, scope matches, and the state is the one
    /// the kind requires (Authorized for RPT, Issued otherwise).
    Verdict validate(TokenId id, const ResourceId& resource) const;

    /// Issued -> Authorized for an RPT. Returns false (state untouched)
    /// for any other kind or state.
    bool authorize(TokenId id);

    /// Issued -> Consumed for a PermissionTicket. Returns false otherwise.
    bool consume(TokenId id);

    /// any -> Revoked. Returns false only for unknown ids.
    bool revoke(TokenId id);

    const Token* find(TokenId id) const;
    std::size_t size() const { return tokens_.size(); }

    static bool holder_allowed(TokenKind kind, NodeRole holder);

private:
    std::vector<Token> tokens_;  // id == index + 1
    Token* mutable_find(TokenId id);
};

}  // namespace mquma

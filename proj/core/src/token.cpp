#include "mquma/token.hpp"

#include <string>

#include "mquma/errors.hpp"

namespace mquma {

std::string_view token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Pat: return "PAT";
        case TokenKind::Aat: return "AAT";
        case TokenKind::Rpt: return "RPT";
        case TokenKind::PermissionTicket: return "PermissionTicket";
    }
    return "?";
}

std::string_view token_state_name(TokenState state) {
    switch (state) {
        case TokenState::Issued: return "Issued";
        case TokenState::Authorized: return "Authorized";
        case TokenState::Revoked: return "Revoked";
        case TokenState::Consumed: return "Consumed";
    }
    return "?";
}

std::string_view invalidity_name(Invalidity reason) {
    switch (reason) {
        case Invalidity::UnknownToken: return "UnknownToken";
        case Invalidity::ScopeMismatch: return "ScopeMismatch";
        case Invalidity::NotYetPermissioned: return "NotYetPermissioned";
        case Invalidity::Revoked: return "Revoked";
        case Invalidity::Consumed: return "Consumed";
    }
    return "?";
}

bool TokenRegistry::holder_allowed(TokenKind kind, NodeRole holder) {
    switch (kind) {
        case TokenKind::Pat: return holder == NodeRole::S1Mb2Rs;
        case TokenKind::Aat: return holder == NodeRole::Client;
        case TokenKind::Rpt: return holder == NodeRole::Client;
        case TokenKind::PermissionTicket: return holder == NodeRole::Client;
    }
    return false;
}

const Token& TokenRegistry::mint(TokenKind kind, NodeRole holder, const ResourceId& scope) {
    if (!holder_allowed(kind, holder)) {
        throw IllegalHolder(std::string(token_kind_name(kind)) + " cannot be issued to " +
                            std::string(role_name(holder)));
    }
    Token t;
    t.id = tokens_.size() + 1;
    t.kind = kind;
    t.issuer = NodeRole::AuthServer;
    t.holder = holder;
    t.scope = scope;
    t.state = TokenState::Issued;
    tokens_.push_back(std::move(t));
    return tokens_.back();
}

Verdict TokenRegistry::validate(TokenId id, const ResourceId& resource) const {
    const Token* t = find(id);
    if (t == nullptr) return Verdict::invalid(Invalidity::UnknownToken);
    if (t->scope != resource) return Verdict::invalid(Invalidity::ScopeMismatch);
    switch (t->state) {
        case TokenState::Revoked: return Verdict::invalid(Invalidity::Revoked);
        case TokenState::Consumed: return Verdict::invalid(Invalidity::Consumed);
        case TokenState::Issued:
            if (t->kind == TokenKind::Rpt) return Verdict::invalid(Invalidity::NotYetPermissioned);
            return Verdict::valid();
        case TokenState::Authorized:
            return Verdict::valid();
    }
    return Verdict::invalid(Invalidity::UnknownToken);
}

bool TokenRegistry::authorize(TokenId id) {
    Token* t = mutable_find(id);
    if (t == nullptr || t->kind != TokenKind::Rpt || t->state != TokenState::Issued) return false;
    t->state = TokenState::Authorized;
    return true;
}

bool TokenRegistry::consume(TokenId id) {
    Token* t = mutable_find(id);
    if (t == nullptr || t->kind != TokenKind::PermissionTicket || t->state != TokenState::Issued) {
        return false;
    }
    t->state = TokenState::Consumed;
    return true;
}

bool TokenRegistry::revoke(TokenId id) {
    Token* t = mutable_find(id);
    if (t == nullptr) return false;
    t->state = TokenState::Revoked;
    return true;
}

const Token* TokenRegistry::find(TokenId id) const {
    if (id == 0 || id > tokens_.size()) return nullptr;
    return &tokens_[id - 1];
}

Token* TokenRegistry::mutable_find(TokenId id) {
    return const_cast<Token*>(static_cast<const TokenRegistry*>(this)->find(id));
}

}  // namespace mquma

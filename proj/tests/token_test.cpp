#include "mquma/token.hpp"

#include <array>
#include <random>

#include <gtest/gtest.h>

#include "mquma/errors.hpp"

using namespace mquma;

TEST(TokenRegistry, MintReturnsIssuedTokenWithUniqueId) {
    TokenRegistry reg;
    const Token& a = reg.mint(TokenKind::Rpt, NodeRole::Client, "temp/room1");
    EXPECT_EQ(a.kind, TokenKind::Rpt);
    EXPECT_EQ(a.state, TokenState::Issued);
    EXPECT_EQ(a.issuer, NodeRole::AuthServer);
    EXPECT_EQ(a.scope, "temp/room1");

    const Token& b = reg.mint(TokenKind::Rpt, NodeRole::Client, "temp/room1");
    EXPECT_NE(a.id, b.id);
}

TEST(TokenRegistry, HolderLegality) {
    TokenRegistry reg;
    EXPECT_THROW(reg.mint(TokenKind::Pat, NodeRole::Client, "temp/room1"), IllegalHolder);
    EXPECT_THROW(reg.mint(TokenKind::Aat, NodeRole::S1Mb2Rs, "r"), IllegalHolder);
    EXPECT_THROW(reg.mint(TokenKind::Rpt, NodeRole::S2Rp, "r"), IllegalHolder);
    EXPECT_NO_THROW(reg.mint(TokenKind::Pat, NodeRole::S1Mb2Rs, "r"));
    EXPECT_NO_THROW(reg.mint(TokenKind::Aat, NodeRole::Client, "r"));
    EXPECT_NO_THROW(reg.mint(TokenKind::PermissionTicket, NodeRole::Client, "r"));
}

TEST(TokenRegistry, RptValidatesOnlyWhenAuthorized) {
    TokenRegistry reg;
    TokenId rpt = reg.mint(TokenKind::Rpt, NodeRole::Client, "r").id;

    Verdict before = reg.validate(rpt, "r");
    EXPECT_FALSE(before.ok);
    EXPECT_EQ(before.reason, Invalidity::NotYetPermissioned);

    ASSERT_TRUE(reg.authorize(rpt));
    Verdict after = reg.validate(rpt, "r");
    EXPECT_TRUE(after.ok);
}

TEST(TokenRegistry, ScopeBinding) {
    TokenRegistry reg;
    TokenId rpt = reg.mint(TokenKind::Rpt, NodeRole::Client, "a").id;
    reg.authorize(rpt);
    Verdict v = reg.validate(rpt, "b");
    EXPECT_FALSE(v.ok);
    EXPECT_EQ(v.reason, Invalidity::ScopeMismatch);
}

TEST(TokenRegistry, UnknownRevokedConsumedVerdicts) {
    TokenRegistry reg;
    EXPECT_EQ(reg.validate(41, "r").reason, Invalidity::UnknownToken);

    TokenId pat = reg.mint(TokenKind::Pat, NodeRole::S1Mb2Rs, "r").id;
    EXPECT_TRUE(reg.validate(pat, "r").ok);
    reg.revoke(pat);
    EXPECT_EQ(reg.validate(pat, "r").reason, Invalidity::Revoked);

    TokenId ticket = reg.mint(TokenKind::PermissionTicket, NodeRole::Client, "r").id;
    reg.consume(ticket);
    EXPECT_EQ(reg.validate(ticket, "r").reason, Invalidity::Consumed);
}

TEST(TokenRegistry, ValidateNeverMutates) {
    TokenRegistry reg;
    TokenId rpt = reg.mint(TokenKind::Rpt, NodeRole::Client, "r").id;
    for (int i = 0; i < 5; ++i) {
        Verdict v = reg.validate(rpt, "r");
        EXPECT_EQ(v.reason, Invalidity::NotYetPermissioned);
        EXPECT_EQ(reg.find(rpt)->state, TokenState::Issued);
    }
}

TEST(TokenRegistry, PermissionTicketSingleUse) {
    TokenRegistry reg;
    TokenId ticket = reg.mint(TokenKind::PermissionTicket, NodeRole::Client, "r").id;
    EXPECT_TRUE(reg.consume(ticket));
    EXPECT_FALSE(reg.consume(ticket));
    EXPECT_EQ(reg.find(ticket)->state, TokenState::Consumed);
}

TEST(TokenRegistry, OnlyRptsAuthorize) {
    TokenRegistry reg;
    TokenId pat = reg.mint(TokenKind::Pat, NodeRole::S1Mb2Rs, "r").id;
    TokenId ticket = reg.mint(TokenKind::PermissionTicket, NodeRole::Client, "r").id;
    EXPECT_FALSE(reg.authorize(pat));
    EXPECT_FALSE(reg.authorize(ticket));
    EXPECT_FALSE(reg.consume(pat));
}

TEST(TokenRegistry, RevokeFromAnyState) {
    TokenRegistry reg;
    TokenId rpt = reg.mint(TokenKind::Rpt, NodeRole::Client, "r").id;
    reg.authorize(rpt);
    EXPECT_TRUE(reg.revoke(rpt));
    EXPECT_EQ(reg.find(rpt)->state, TokenState::Revoked);
    EXPECT_TRUE(reg.revoke(rpt));  // any -> Revoked includes Revoked
    EXPECT_FALSE(reg.revoke(9999));
    EXPECT_FALSE(reg.authorize(rpt));  // no way back out
}

// Random transition sequences against an independently written model of
// the legal-transition table: the registry must agree with the model
// after every operation and never land in an illegal state.
TEST(TokenRegistry, RandomTransitionsNeverReachIllegalState) {
    std::mt19937_64 rng(0xded5eed);
    for (int round = 0; round < 1000; ++round) {
        TokenRegistry reg;
        std::vector<Token> model;  // expected states, id == index + 1

        for (int op = 0; op < 30; ++op) {
            switch (rng() % 4) {
                case 0: {
                    auto kind = static_cast<TokenKind>(rng() % 4);
                    NodeRole holder =
                        kind == TokenKind::Pat ? NodeRole::S1Mb2Rs : NodeRole::Client;
                    const Token& t = reg.mint(kind, holder, "r");
                    model.push_back(t);
                    break;
                }
                case 1: {
                    TokenId id = rng() % (model.size() + 2);
                    bool expect = id >= 1 && id <= model.size() &&
                                  model[id - 1].kind == TokenKind::Rpt &&
                                  model[id - 1].state == TokenState::Issued;
                    ASSERT_EQ(reg.authorize(id), expect);
                    if (expect) model[id - 1].state = TokenState::Authorized;
                    break;
                }
                case 2: {
                    TokenId id = rng() % (model.size() + 2);
                    bool expect = id >= 1 && id <= model.size() &&
                                  model[id - 1].kind == TokenKind::PermissionTicket &&
                                  model[id - 1].state == TokenState::Issued;
                    ASSERT_EQ(reg.consume(id), expect);
                    if (expect) model[id - 1].state = TokenState::Consumed;
                    break;
                }
                case 3: {
                    TokenId id = rng() % (model.size() + 2);
                    bool expect = id >= 1 && id <= model.size();
                    ASSERT_EQ(reg.revoke(id), expect);
                    if (expect) model[id - 1].state = TokenState::Revoked;
                    break;
                }
            }
            for (std::size_t i = 0; i < model.size(); ++i) {
                const Token* t = reg.find(i + 1);
                ASSERT_NE(t, nullptr);
                ASSERT_EQ(t->state, model[i].state);
                // Illegal combinations can never appear.
                ASSERT_FALSE(t->state == TokenState::Authorized && t->kind != TokenKind::Rpt);
                ASSERT_FALSE(t->state == TokenState::Consumed &&
                             t->kind != TokenKind::PermissionTicket);
            }
        }
    }
}

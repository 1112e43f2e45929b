#include "mquma/broker.hpp"

#include <gtest/gtest.h>

#include "mquma/errors.hpp"
#include "support/scenario.hpp"

using namespace mquma;

namespace {

BrokerState mb1() { return BrokerState(NodeRole::Mb1P2Ro); }

}  // namespace

TEST(Broker, ConnectEmitsConnectThenConnAck) {
    BrokerState broker = mb1();
    FlowTranscript t;
    broker.connect(NodeRole::P1, t);

    ASSERT_EQ(t.messages.size(), 2u);
    EXPECT_EQ(t.messages[0].kind, MessageKind::Connect);
    EXPECT_EQ(t.messages[0].from, NodeRole::P1);
    EXPECT_EQ(t.messages[0].to, NodeRole::Mb1P2Ro);
    EXPECT_EQ(t.messages[1].kind, MessageKind::ConnAck);
    EXPECT_EQ(t.messages[1].from, NodeRole::Mb1P2Ro);
    EXPECT_TRUE(broker.has_session(NodeRole::P1));
}

TEST(Broker, DoubleConnectKeepsOneSubscriptionSet) {
    BrokerState broker = mb1();
    FlowTranscript t;
    broker.connect(NodeRole::Client, t);
    broker.subscribe(NodeRole::Client, "topic", t);
    broker.connect(NodeRole::Client, t);
    ASSERT_EQ(broker.subscribers("topic").size(), 1u);
}

TEST(Broker, SubscribeWithoutSessionIsNotConnected) {
    BrokerState broker = mb1();
    FlowTranscript t;
    EXPECT_THROW(broker.subscribe(NodeRole::Client, "topic", t), NotConnected);
}

TEST(Broker, SubscribeCreatesTopicAndDeduplicates) {
    BrokerState broker = mb1();
    FlowTranscript t;
    broker.connect(NodeRole::Client, t);
    broker.subscribe(NodeRole::Client, "fresh", t);
    EXPECT_EQ(broker.subscribers("fresh").size(), 1u);
    broker.subscribe(NodeRole::Client, "fresh", t);
    EXPECT_EQ(broker.subscribers("fresh").size(), 1u);
}

TEST(Broker, PublishFansOutOncePerSubscriber) {
    BrokerState broker = mb1();
    FlowTranscript t;
    broker.connect(NodeRole::Client, t);
    broker.connect(NodeRole::S2Rp, t);
    broker.subscribe(NodeRole::Client, "topic", t);
    broker.subscribe(NodeRole::S2Rp, "topic", t);

    auto deliveries = broker.publish({"topic", "v", NodeRole::P1}, t);
    ASSERT_EQ(deliveries.size(), 2u);
    EXPECT_EQ(deliveries[0].kind, MessageKind::Publish);
    EXPECT_EQ(deliveries[0].to, NodeRole::Client);
    EXPECT_EQ(deliveries[1].to, NodeRole::S2Rp);
}

TEST(Broker, PublishWithNoSubscribersUpdatesRetainedOnly) {
    BrokerState broker = mb1();
    auto deliveries = broker.publish({"lonely", "v1", NodeRole::P1});
    EXPECT_TRUE(deliveries.empty());
    EXPECT_EQ(broker.last_value("lonely"), "v1");
}

TEST(Broker, PayloadBoundAt127Bytes) {
    BrokerState broker = mb1();
    std::string max_payload(127, 'x');
    EXPECT_NO_THROW(broker.publish({"t", max_payload, NodeRole::P1}));
    std::string oversize(128, 'x');
    EXPECT_THROW(broker.publish({"t", oversize, NodeRole::P1}), PayloadTooLarge);
    // the rejected publish left no trace
    EXPECT_EQ(broker.last_value("t"), max_payload);
    EXPECT_EQ(broker.log().size(), 1u);
}

TEST(Broker, LastValueIsLastWrite) {
    BrokerState broker = mb1();
    EXPECT_FALSE(broker.last_value("t").has_value());
    broker.publish({"t", "v1", NodeRole::P1});
    broker.publish({"t", "v2", NodeRole::P1});
    EXPECT_EQ(broker.last_value("t"), "v2");
    EXPECT_EQ(broker.log().size(), 2u);
}

TEST(Broker, ConnectSubscribePublishDelivers) {
    BrokerState broker = mb1();
    FlowTranscript t;
    broker.connect(NodeRole::S2Rp, t);
    broker.subscribe(NodeRole::S2Rp, "temp", t);
    auto deliveries = broker.publish({"temp", "21.5", NodeRole::P1}, t);
    ASSERT_EQ(deliveries.size(), 1u);
    EXPECT_EQ(deliveries[0].to, NodeRole::S2Rp);
    EXPECT_EQ(deliveries[0].resource, "temp");
}

TEST(Broker, RandomOperationSequencesKeepInvariants) {
    std::size_t publishes = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto rep = mquma::testsupport::run_random_broker_sequence(seed);
        publishes += rep.publishes;
        EXPECT_TRUE(rep.violations.empty())
            << rep.violations.size() << " violations, first: " << rep.violations.front();
    }
    EXPECT_GT(publishes, 300u);  // the walk actually publishes
}

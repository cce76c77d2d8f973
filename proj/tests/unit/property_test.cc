// Copyright 2026 The SHIA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "shia/error.h"
#include "shia/logic/netlist.h"
#include "shia/logic/netlist_io.h"
#include "shia/logic/oracle.h"
#include "shia/logic/simulator.h"
#include "shia/protocol/framing.h"
#include "shia/protocol/pin_message.h"
#include "shia/transport/loopback.h"
#include "support/random_netlist.h"

namespace shia {
namespace {

using ::testing::Contains;
using logic::InputVector;
using logic::PortRef;
using logic::Violation;

constexpr int kRandomNetlists = 150;

std::vector<Violation::Kind> KindsOf(const logic::Netlist& net) {
  std::vector<Violation::Kind> kinds;
  for (const auto& v : logic::ValidateNetlist(net)) kinds.push_back(v.kind);
  return kinds;
}

logic::Connector& ConnectorTo(logic::Netlist& net, const std::string& to) {
  for (auto& c : net.connectors) {
    if (c.to.ToString() == to) return c;
  }
  throw std::runtime_error("no connector to " + to);
}

TEST(PropertyTest, SettleAgreesWithOracleOnRandomNetlists) {
  std::mt19937 rng(20261018);
  for (int n = 0; n < kRandomNetlists; ++n) {
    const logic::Netlist net = testing::RandomNetlist(rng);
    ASSERT_TRUE(logic::ValidateNetlist(net).empty()) << logic::EmitNetlist(net);
    logic::Simulator sim(net);
    std::vector<int> order(logic::kVectorCount);
    for (int i = 0; i < logic::kVectorCount; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i : order) {
      const auto v = InputVector::FromIndex(i);
      EXPECT_EQ(sim.Settle(v).outputs, logic::OracleEval(net, v))
          << "netlist " << n << " vector " << v.ToString() << "\n"
          << logic::EmitNetlist(net);
    }
  }
}

TEST(PropertyTest, SettleEventsBoundedByConnectorCount) {
  std::mt19937 rng(7);
  for (int n = 0; n < 40; ++n) {
    const logic::Netlist net = testing::RandomNetlist(rng);
    logic::Simulator sim(net);
    std::uniform_int_distribution<int> pick(0, logic::kVectorCount - 1);
    for (int step = 0; step < 64; ++step) {
      EXPECT_LE(sim.Settle(InputVector::FromIndex(pick(rng))).events,
                net.connectors.size());
    }
  }
}

TEST(PropertyTest, RandomNetlistsSurviveSerialization) {
  std::mt19937 rng(99);
  for (int n = 0; n < 50; ++n) {
    const logic::Netlist net = testing::RandomNetlist(rng);
    EXPECT_EQ(logic::LoadNetlist(logic::EmitNetlist(net)), net);
  }
}

TEST(PropertyTest, ReferenceMutationsAreRejected) {
  const logic::Netlist& ref = logic::ReferenceNetlist();
  ASSERT_TRUE(logic::ValidateNetlist(ref).empty());

  logic::Netlist fan_out = ref;
  fan_out.connectors.push_back(
      {*PortRef::Parse("nand_a.out1"), *PortRef::Parse("xor_b.in1")});
  EXPECT_THAT(KindsOf(fan_out), Contains(Violation::Kind::kFanOut));
  EXPECT_THAT(KindsOf(fan_out), Contains(Violation::Kind::kMultipleDrivers));

  logic::Netlist undriven = ref;
  std::erase_if(undriven.connectors, [](const logic::Connector& c) {
    return c.to.ToString() == "nand_f.in2";
  });
  EXPECT_THAT(KindsOf(undriven), Contains(Violation::Kind::kMissingDriver));

  logic::Netlist no_output = ref;
  std::erase_if(no_output.connectors, [](const logic::Connector& c) {
    return c.to.ToString() == "ext.out3";
  });
  EXPECT_THAT(KindsOf(no_output), Contains(Violation::Kind::kMissingDriver));

  logic::Netlist cycle = ref;
  ConnectorTo(cycle, "and_d.in1").from = *PortRef::Parse("ext.in2");
  ConnectorTo(cycle, "nand_a.in2").from = *PortRef::Parse("split_nand_a.out1");
  EXPECT_THAT(KindsOf(cycle), Contains(Violation::Kind::kCycle));
  EXPECT_THROW(logic::RequireValid(cycle), logic::ValidationError);
  EXPECT_THROW(logic::Simulator{cycle}, logic::ValidationError);

  logic::Netlist duplicate = ref;
  duplicate.blocks.push_back(duplicate.blocks.front());
  EXPECT_THAT(KindsOf(duplicate), Contains(Violation::Kind::kDuplicateBlock));

  logic::Netlist bad_port = ref;
  ConnectorTo(bad_port, "not_e.in1").to = *PortRef::Parse("not_e.in2");
  EXPECT_THAT(KindsOf(bad_port), Contains(Violation::Kind::kUnknownPort));
}

TEST(PropertyTest, CodecRoundTripsEveryMessage) {
  for (int pin = 1; pin <= 5; ++pin) {
    for (auto level : {logic::SignalLevel::kLow, logic::SignalLevel::kHigh}) {
      const protocol::Frame f = protocol::EncodePinMessage(pin, level);
      EXPECT_EQ(protocol::DecodePinMessage(f.view()),
                (protocol::Decoded{pin, level}));
    }
  }
}

TEST(PropertyTest, RandomBytesDecodeOrThrowTyped) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> len(0, 4);
  for (int i = 0; i < 20000; ++i) {
    std::string s(len(rng), '\0');
    for (char& c : s) c = static_cast<char>(byte(rng));
    try {
      const auto d = protocol::DecodePinMessage(s);
      EXPECT_EQ(protocol::EncodePinMessage(d.pin, d.level).view(), s);
    } catch (const Error& e) {
      EXPECT_THAT((std::vector{ErrorCode::kMalformedFrame, ErrorCode::kInvalidPin,
                               ErrorCode::kInvalidLevel}),
                  Contains(e.code()));
    }
  }
}

TEST(PropertyTest, FramingIsIndependentOfChunking) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pin(1, 5);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::string stream;
    for (int i = 0; i < 20; ++i) {
      stream += protocol::EncodePinMessage(
                    pin(rng), bit(rng) ? logic::SignalLevel::kHigh
                                       : logic::SignalLevel::kLow)
                    .str();
    }
    protocol::FrameAssembler assembler;
    std::vector<protocol::Frame> frames;
    std::uniform_int_distribution<std::size_t> chunk(1, 7);
    for (std::size_t at = 0; at < stream.size();) {
      const std::size_t n = std::min(chunk(rng), stream.size() - at);
      for (auto& f : assembler.Push(std::string_view(stream).substr(at, n))) {
        frames.push_back(f);
      }
      at += n;
    }
    EXPECT_EQ(frames, protocol::FrameStream(stream));
    EXPECT_FALSE(assembler.has_partial());
  }
}

TEST(PropertyTest, LoopbackPreservesWriteOrder) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> gap(0, 30);
  std::uniform_int_distribution<int> latency(0, 50);
  for (int trial = 0; trial < 50; ++trial) {
    transport::VirtualClock clock;
    auto [a, b] = transport::OpenLoopback(clock, protocol::SerialConfig{},
                                          transport::Millis{latency(rng)});
    std::string sent;
    std::string received;
    for (int i = 0; i < 40; ++i) {
      const std::string frame = protocol::EncodePinMessage(
          1 + i % 5, i % 2 ? logic::SignalLevel::kHigh : logic::SignalLevel::kLow)
                                    .str();
      a.tx->Write(frame);
      sent += frame;
      clock.Advance(transport::Millis{gap(rng)});
      received += b.rx->ReadAvailable().bytes;
      EXPECT_EQ(sent.compare(0, received.size(), received), 0);
    }
    clock.Advance(transport::Millis{100});
    received += b.rx->ReadAvailable().bytes;
    EXPECT_EQ(received, sent);
  }
}

}  // namespace
}  // namespace shia

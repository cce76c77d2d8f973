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

#include "shia/transport/loopback.h"

#include <memory>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "shia/error.h"

namespace shia::transport {
namespace {

using ::testing::HasSubstr;

TEST(LoopbackTest, ZeroLatencyDeliversImmediately) {
  VirtualClock clock;
  auto [a, b] = OpenLoopback(clock, SerialConfig{}, Millis{0});
  a.tx->Write("11");
  EXPECT_EQ(b.rx->ReadAvailable().bytes, "11");
  EXPECT_EQ(b.rx->ReadAvailable().bytes, "");
  b.tx->Write("31");
  EXPECT_EQ(a.rx->ReadAvailable().bytes, "31");
}

TEST(LoopbackTest, LatencyDelaysDeliveryAndKeepsOrder) {
  VirtualClock clock;
  auto [a, b] = OpenLoopback(clock, SerialConfig{}, Millis{15});
  a.tx->Write("11");
  clock.Advance(Millis{5});
  a.tx->Write("20");
  clock.Advance(Millis{9});
  EXPECT_EQ(b.rx->ReadAvailable().bytes, "");
  clock.Advance(Millis{1});
  EXPECT_EQ(b.rx->ReadAvailable().bytes, "11");
  clock.Advance(Millis{5});
  EXPECT_EQ(b.rx->ReadAvailable().bytes, "20");
}

TEST(LoopbackTest, ManyWritesArriveInWriteOrder) {
  VirtualClock clock;
  auto [a, b] = OpenLoopback(clock, SerialConfig{}, Millis{3});
  std::string expected;
  for (int i = 0; i < 200; ++i) {
    const std::string f = {static_cast<char>('1' + i % 5),
                           static_cast<char>('0' + i % 2)};
    a.tx->Write(f);
    expected += f;
    if (i % 7 == 0) clock.Advance(Millis{1});
  }
  clock.Advance(Millis{10});
  EXPECT_EQ(b.rx->ReadAvailable().bytes, expected);
}

TEST(LoopbackTest, CloseIsSeenByPeerAndWritesFail) {
  VirtualClock clock;
  auto [a, b] = OpenLoopback(clock, SerialConfig{}, Millis{0});
  a.tx->Write("51");
  a.Close();
  const ReadResult r = b.rx->ReadAvailable();
  EXPECT_EQ(r.bytes, "51");
  EXPECT_TRUE(r.closed);
  try {
    b.tx->Write("11");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStreamClosed);
  }
  EXPECT_THROW(a.tx->Write("11"), Error);
}

TEST(LoopbackTest, PeerConfigsAreExposed) {
  VirtualClock clock;
  LoopbackOptions options;
  SerialConfig odd;
  odd.parity = protocol::Parity::kOdd;
  options.second_config = odd;
  auto [a, b] = OpenLoopback(clock, options);
  EXPECT_EQ(a.config, SerialConfig{});
  EXPECT_EQ(a.peer_config, odd);
  EXPECT_EQ(b.config, odd);
  EXPECT_EQ(b.peer_config, SerialConfig{});
}

TEST(LoopbackTest, TranscriptRecordsWritesAndDeliveries) {
  VirtualClock clock;
  LoopbackOptions options;
  options.latency = Millis{4};
  options.transcript = std::make_shared<Transcript>();
  options.first_name = "model";
  options.second_name = "board";
  auto [a, b] = OpenLoopback(clock, options);
  clock.Advance(Millis{10});
  a.tx->Write("21");
  clock.Advance(Millis{4});
  const auto entries = options.transcript->entries();
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].kind, TranscriptEntry::Kind::kWrite);
  EXPECT_EQ(entries[0].at, Millis{10});
  EXPECT_EQ(entries[0].channel, "model->board");
  EXPECT_EQ(entries[1].kind, TranscriptEntry::Kind::kDeliver);
  EXPECT_EQ(entries[1].at, Millis{14});
  EXPECT_THAT(options.transcript->Render(), HasSubstr("14 deliver model->board 21"));
}

TEST(FrameReaderTest, ReassemblesAndReportsTruncation) {
  VirtualClock clock;
  auto [a, b] = OpenLoopback(clock, SerialConfig{}, Millis{0});
  FrameReader reader(b.rx);
  a.tx->Write("1");
  EXPECT_TRUE(reader.Read().frames.empty());
  a.tx->Write("13");
  auto r = reader.Read();
  ASSERT_EQ(r.frames.size(), 1u);
  EXPECT_EQ(r.frames[0].str(), "11");
  a.Close();
  try {
    reader.Read();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTruncatedFrame);
  }
}

}  // namespace
}  // namespace shia::transport

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

#include "shia/board/board_server.h"

#include <string>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "shia/logic/netlist_io.h"
#include "shia/transport/loopback.h"

namespace shia::board {
namespace {

using ::testing::Contains;
using ::testing::ElementsAre;
using transport::Millis;

std::vector<std::string> Lines(const std::vector<BoardLogEntry>& log,
                               BoardLogEntry::Kind kind) {
  std::vector<std::string> out;
  for (const auto& e : log) {
    if (e.kind == kind) out.push_back(e.line);
  }
  return out;
}

class BoardServerTest : public ::testing::Test {
 protected:
  void Start(BoardServerOptions options = {}) {
    auto [a, b] = transport::OpenLoopback(clock_, {}, Millis{0});
    host_ = a;
    server_ = std::make_unique<BoardServer>(b, Board(logic::ReferenceNetlist()),
                                            clock_, options);
    server_->Start();
  }

  std::string Drain() { return host_.rx->ReadAvailable().bytes; }

  transport::VirtualClock clock_;
  transport::Endpoint host_;
  std::unique_ptr<BoardServer> server_;
};

TEST_F(BoardServerTest, ReportsFullStateOnStart) {
  Start();
  EXPECT_EQ(Drain(), "1120314150");
}

TEST_F(BoardServerTest, CommandsApplyOnNextPoll) {
  Start();
  Drain();
  EXPECT_EQ(server_->poll_period(), Millis{100});
  clock_.Advance(Millis{30});
  host_.tx->Write("51");
  clock_.Advance(Millis{69});
  EXPECT_EQ(Drain(), "");
  clock_.Advance(Millis{1});
  EXPECT_EQ(Drain(), "40");
  const auto log = server_->log();
  EXPECT_THAT(Lines(log, BoardLogEntry::Kind::kRx),
              ElementsAre("RX 51 -> GPIO25 HIGH"));
  EXPECT_THAT(Lines(log, BoardLogEntry::Kind::kTx), Contains("TX 40"));
  for (const auto& e : log) {
    if (e.kind == BoardLogEntry::Kind::kRx) {
      EXPECT_EQ(e.at, Millis{100});
      EXPECT_EQ(e.gpio, 25);
    }
  }
}

TEST_F(BoardServerTest, PollRateSetsPeriod) {
  BoardServerOptions options;
  options.poll_hz = 3.0;
  Start(options);
  EXPECT_EQ(server_->poll_period(), Millis{333});
}

TEST_F(BoardServerTest, InvalidFramesAreLoggedAndSkipped) {
  Start();
  Drain();
  host_.tx->Write("9131");
  clock_.Advance(Millis{100});
  const auto log = server_->log();
  ASSERT_EQ(Lines(log, BoardLogEntry::Kind::kError).size(), 1u);
  EXPECT_THAT(Lines(log, BoardLogEntry::Kind::kRx),
              ElementsAre("RX 31 -> GPIO23 HIGH"));
}

TEST_F(BoardServerTest, FaultInjectionReportsChange) {
  Start();
  Drain();
  server_->InjectFault(FaultSpec::Inverted(4));
  EXPECT_EQ(Drain(), "40");
}

TEST_F(BoardServerTest, StopsWhenPeerCloses) {
  Start();
  EXPECT_TRUE(server_->running());
  host_.Close();
  clock_.Advance(Millis{100});
  EXPECT_FALSE(server_->running());
  server_->Wait();
}

TEST_F(BoardServerTest, LogSinkReceivesLines) {
  std::vector<std::string> lines;
  BoardServerOptions options;
  options.log_sink = [&](const std::string& l) { lines.push_back(l); };
  Start(options);
  host_.tx->Write("11");
  clock_.Advance(Millis{100});
  EXPECT_THAT(lines, Contains("RX 11 -> GPIO21 HIGH"));
  EXPECT_THAT(lines, Contains("TX 11"));
}

}  // namespace
}  // namespace shia::board

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

#include "shia/transport/stream.h"

#include <chrono>
#include <future>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "shia/error.h"

namespace shia::transport {
namespace {

std::string ReadAtLeast(ByteSource& rx, std::size_t n, bool* closed = nullptr) {
  std::string got;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::seconds(5);
  while (got.size() < n && std::chrono::steady_clock::now() < deadline) {
    ReadResult r = rx.ReadAvailable();
    got += r.bytes;
    if (r.closed) {
      if (closed) *closed = true;
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  return got;
}

TEST(StreamAddressTest, Parses) {
  const auto a = StreamAddress::Parse("127.0.0.1:9000");
  EXPECT_EQ(a.host, "127.0.0.1");
  EXPECT_EQ(a.port, 9000);
  EXPECT_EQ(StreamAddress::Parse(":9001").host, "");
  for (const char* bad : {"", "9000", "host:", "host:abc", "host:70000"}) {
    try {
      StreamAddress::Parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kConfig) << bad;
    }
  }
}

TEST(StreamTest, BytesFlowBothWays) {
  StreamListener listener("127.0.0.1:0");
  const std::string address = "127.0.0.1:" + std::to_string(listener.port());
  auto server = std::async(std::launch::async, [&] { return listener.Accept(); });
  Endpoint client = ConnectStream(address);
  Endpoint peer = server.get();
  client.tx->Write("11");
  client.tx->Write("21");
  EXPECT_EQ(ReadAtLeast(*peer.rx, 4), "1121");
  peer.tx->Write("30");
  EXPECT_EQ(ReadAtLeast(*client.rx, 2), "30");
  client.Close();
  peer.Close();
}

TEST(StreamTest, PeerCloseIsObserved) {
  StreamListener listener("127.0.0.1:0");
  auto server = std::async(std::launch::async, [&] { return listener.Accept(); });
  Endpoint client =
      ConnectStream("127.0.0.1:" + std::to_string(listener.port()));
  Endpoint peer = server.get();
  peer.tx->Write("51");
  peer.Close();
  bool closed = false;
  EXPECT_EQ(ReadAtLeast(*client.rx, 100, &closed), "51");
  EXPECT_TRUE(closed);
}

TEST(StreamTest, ConnectToNothingIsRefused) {
  std::uint16_t port = 0;
  {
    StreamListener probe("127.0.0.1:0");
    port = probe.port();
  }
  try {
    ConnectStream("127.0.0.1:" + std::to_string(port));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConnectionRefused);
  }
}

TEST(StreamTest, BindingATakenPortFails) {
  StreamListener first("127.0.0.1:0");
  try {
    StreamListener second("127.0.0.1:" + std::to_string(first.port()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBindFailure);
  }
}

TEST(StreamTest, AcceptAfterCloseThrows) {
  StreamListener listener("127.0.0.1:0");
  auto pending = std::async(std::launch::async, [&] {
    try {
      listener.Accept();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  });
  std::this_thread::sleep_for(std::chrono::milliseconds(50));
  listener.Close();
  EXPECT_EQ(pending.get(), ErrorCode::kStreamClosed);
}

}  // namespace
}  // namespace shia::transport

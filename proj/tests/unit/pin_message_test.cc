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

#include "shia/protocol/pin_message.h"

#include <chrono>
#include <string>

#include <gtest/gtest.h>

#include "shia/error.h"
#include "shia/protocol/serial_config.h"

namespace shia::protocol {
namespace {

constexpr SignalLevel L = SignalLevel::kLow;
constexpr SignalLevel H = SignalLevel::kHigh;

ErrorCode DecodeError(std::string_view frame) {
  try {
    DecodePinMessage(frame);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "decoded " << frame;
  return ErrorCode::kIo;
}

TEST(PinMessageTest, DocumentedExamplesMatchBytes) {
  const Frame high1 = EncodePinMessage(1, H);
  EXPECT_EQ(high1.bytes()[0], 0x31);
  EXPECT_EQ(high1.bytes()[1], 0x31);
  EXPECT_EQ(high1.str(), "11");
  EXPECT_EQ(EncodePinMessage(1, L).str(), "10");
  EXPECT_EQ(EncodePinMessage(2, H).str(), "21");
  EXPECT_EQ(DecodePinMessage("21"), (Decoded{2, H}));
}

TEST(PinMessageTest, AllValidMessagesRoundTrip) {
  int count = 0;
  for (int pin = 1; pin <= 5; ++pin) {
    for (SignalLevel level : {L, H}) {
      const Frame f = EncodePinMessage(pin, level);
      EXPECT_EQ(f.view().size(), kFrameSize);
      EXPECT_EQ(DecodePinMessage(f.view()), (Decoded{pin, level}));
      ++count;
    }
  }
  EXPECT_EQ(count, 10);
}

TEST(PinMessageTest, EncodeRejectsBadPins) {
  for (int pin : {0, 6, -1, 10}) {
    try {
      EncodePinMessage(pin, H);
      FAIL() << pin;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidPin);
    }
  }
}

TEST(PinMessageTest, DecodeClassifiesErrors) {
  EXPECT_EQ(DecodeError("61"), ErrorCode::kInvalidPin);
  EXPECT_EQ(DecodeError("01"), ErrorCode::kInvalidPin);
  EXPECT_EQ(DecodeError("12"), ErrorCode::kInvalidLevel);
  EXPECT_EQ(DecodeError("1x"), ErrorCode::kMalformedFrame);
  EXPECT_EQ(DecodeError("a1"), ErrorCode::kMalformedFrame);
  EXPECT_EQ(DecodeError("1"), ErrorCode::kMalformedFrame);
  EXPECT_EQ(DecodeError("111"), ErrorCode::kMalformedFrame);
  EXPECT_EQ(DecodeError(""), ErrorCode::kMalformedFrame);
}

TEST(PinMessageTest, ExhaustiveScanAcceptsExactlyTenFrames) {
  const auto start = std::chrono::steady_clock::now();
  int accepted = 0;
  int rejected = 0;
  for (int a = 0; a < 256; ++a) {
    for (int b = 0; b < 256; ++b) {
      const char bytes[2] = {static_cast<char>(a), static_cast<char>(b)};
      try {
        const Decoded d = DecodePinMessage(std::string_view(bytes, 2));
        EXPECT_EQ(EncodePinMessage(d.pin, d.level).view(),
                  std::string_view(bytes, 2));
        ++accepted;
      } catch (const Error&) {
        ++rejected;
      }
    }
  }
  EXPECT_EQ(accepted, 10);
  EXPECT_EQ(rejected, 65526);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
}

TEST(PinMessageTest, DirectionIsMetadataOnly) {
  const PinMessage cmd{3, H, Direction::kCommand};
  const PinMessage resp{3, H, Direction::kResponse};
  EXPECT_EQ(Encode(cmd), Encode(resp));
  EXPECT_EQ(DecodeAs("31", Direction::kResponse), resp);
  EXPECT_EQ(DecodeAs("31", Direction::kCommand), cmd);
}

TEST(PinMessageTest, FrameFromBytesChecksLength) {
  EXPECT_EQ(Frame::FromBytes("41").str(), "41");
  EXPECT_THROW(Frame::FromBytes("4"), Error);
}

TEST(SerialConfigTest, DefaultIs8N1At9600) {
  const SerialConfig c;
  EXPECT_EQ(c.byte_size, 8);
  EXPECT_EQ(c.stop_bits, 1);
  EXPECT_EQ(c.parity, Parity::kNone);
  EXPECT_EQ(c.nominal_baud, 9600);
  EXPECT_EQ(c.ToString(), "9600 8N1");
  SerialConfig other = c;
  other.parity = Parity::kEven;
  EXPECT_NE(c, other);
}

}  // namespace
}  // namespace shia::protocol

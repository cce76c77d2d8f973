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

#include <cctype>

#include "shia/protocol/serial_config.h"

namespace shia::protocol {
namespace {

std::string Printable(std::string_view bytes) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    if (std::isprint(c)) {
      out.push_back(static_cast<char>(c));
    } else {
      out += "\\x";
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xf]);
    }
  }
  return out;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string SerialConfig::ToString() const {
  const char* p = parity == Parity::kNone   ? "N"
                  : parity == Parity::kEven ? "E"
                                            : "O";
  return std::to_string(nominal_baud) + " " + std::to_string(byte_size) + p +
         std::to_string(stop_bits);
}

Frame Frame::FromBytes(std::string_view two_bytes) {
  if (two_bytes.size() != kFrameSize) {
    throw Error(ErrorCode::kMalformedFrame,
                "frame must be 2 bytes, got " + std::to_string(two_bytes.size()));
  }
  return Frame(two_bytes[0], two_bytes[1]);
}

Frame EncodePinMessage(int pin, SignalLevel level) {
  if (pin < 1 || pin > logic::kChassisPins) {
    throw Error(ErrorCode::kInvalidPin,
                "pin " + std::to_string(pin) + " outside 1..5");
  }
  return Frame(static_cast<char>('0' + pin),
               level == SignalLevel::kHigh ? '1' : '0');
}

Decoded DecodePinMessage(std::string_view frame) {
  if (frame.size() != kFrameSize) {
    throw Error(ErrorCode::kMalformedFrame,
                "frame must be 2 bytes, got " + std::to_string(frame.size()));
  }
  if (!IsDigit(frame[0]) || !IsDigit(frame[1])) {
    throw Error(ErrorCode::kMalformedFrame,
                "non-digit byte in frame \"" + Printable(frame) + "\"");
  }
  const int pin = frame[0] - '0';
  if (pin < 1 || pin > logic::kChassisPins) {
    throw Error(ErrorCode::kInvalidPin,
                "pin digit " + std::to_string(pin) + " outside 1..5");
  }
  if (frame[1] != '0' && frame[1] != '1') {
    throw Error(ErrorCode::kInvalidLevel,
                std::string("level digit '") + frame[1] + "' is not 0 or 1");
  }
  return {pin, frame[1] == '1' ? SignalLevel::kHigh : SignalLevel::kLow};
}

PinMessage DecodeAs(std::string_view frame, Direction direction) {
  const Decoded d = DecodePinMessage(frame);
  return {d.pin, d.level, direction};
}

}  // namespace shia::protocol

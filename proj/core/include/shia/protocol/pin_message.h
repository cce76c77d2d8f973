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

#ifndef SHIA_PROTOCOL_PIN_MESSAGE_H_
#define SHIA_PROTOCOL_PIN_MESSAGE_H_

#include <array>
#include <string>
#include <string_view>

#include "shia/logic/signal.h"

namespace shia::protocol {

using logic::SignalLevel;

// Two ASCII bytes on the wire: pin digit '1'..'5', then '1' (high) or
// '0' (low).
inline constexpr std::size_t kFrameSize = 2;

class Frame {
 public:
  Frame() = default;
  Frame(char pin, char level) : bytes_{pin, level} {}
  static Frame FromBytes(std::string_view two_bytes);

  std::string_view view() const { return {bytes_.data(), bytes_.size()}; }
  std::string str() const { return std::string(view()); }
  const std::array<char, kFrameSize>& bytes() const { return bytes_; }

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::array<char, kFrameSize> bytes_{'0', '0'};
};

// The wire cannot tell the two apart; direction is implied by flow.
enum class Direction {
  kCommand,   // model -> board, refers to input pins
  kResponse,  // board -> model, refers to output pins
};

struct PinMessage {
  int pin = 1;
  SignalLevel level = SignalLevel::kLow;
  Direction direction = Direction::kCommand;

  friend bool operator==(const PinMessage&, const PinMessage&) = default;
};

// Throws kInvalidPin when pin is outside 1..5.
Frame EncodePinMessage(int pin, SignalLevel level);
inline Frame Encode(const PinMessage& msg) {
  return EncodePinMessage(msg.pin, msg.level);
}

struct Decoded {
  int pin;
  SignalLevel level;

  friend bool operator==(const Decoded&, const Decoded&) = default;
};

// Inverse of EncodePinMessage. Throws kMalformedFrame for a wrong length or
// a non-digit byte, kInvalidPin for a pin digit outside 1..5 and
// kInvalidLevel for a level digit other than 0 or 1.
Decoded DecodePinMessage(std::string_view frame);

// Decoding with the direction attached.
PinMessage DecodeAs(std::string_view frame, Direction direction);

}  // namespace shia::protocol

#endif  // SHIA_PROTOCOL_PIN_MESSAGE_H_

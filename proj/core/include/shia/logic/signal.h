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

#ifndef SHIA_LOGIC_SIGNAL_H_
#define SHIA_LOGIC_SIGNAL_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "shia/error.h"

namespace shia::logic {

// Binary level carried on every port. Ordered low < high so tables sort
// naturally.
enum class SignalLevel : std::uint8_t { kLow = 0, kHigh = 1 };

constexpr SignalLevel Not(SignalLevel s) {
  return s == SignalLevel::kHigh ? SignalLevel::kLow : SignalLevel::kHigh;
}
constexpr SignalLevel FromBool(bool b) {
  return b ? SignalLevel::kHigh : SignalLevel::kLow;
}
constexpr bool ToBool(SignalLevel s) { return s == SignalLevel::kHigh; }
constexpr int ToBit(SignalLevel s) { return s == SignalLevel::kHigh ? 1 : 0; }

inline const char* LevelName(SignalLevel s) {
  return s == SignalLevel::kHigh ? "HIGH" : "LOW";
}

inline constexpr int kChassisPins = 5;
inline constexpr int kVectorCount = 1 << kChassisPins;

// Five chassis pins addressed 1..5. The tag keeps input and output vectors
// from being mixed up.
template <typename Tag>
class PinVector {
 public:
  constexpr PinVector() { bits_.fill(SignalLevel::kLow); }
  constexpr explicit PinVector(std::array<SignalLevel, kChassisPins> bits)
      : bits_(bits) {}

  // Row index convention: pin 1 is the most significant bit, so index 0 is
  // all-low and index 31 is all-high.
  static PinVector FromIndex(int index) {
    if (index < 0 || index >= kVectorCount) {
      throw Error(ErrorCode::kInvalidPin,
                  "vector index out of range: " + std::to_string(index));
    }
    PinVector v;
    for (int pin = 1; pin <= kChassisPins; ++pin) {
      v.set(pin, FromBool((index >> (kChassisPins - pin)) & 1));
    }
    return v;
  }

  int index() const {
    int out = 0;
    for (int pin = 1; pin <= kChassisPins; ++pin) {
      out = (out << 1) | ToBit(at(pin));
    }
    return out;
  }

  SignalLevel at(int pin) const {
    CheckPin(pin);
    return bits_[static_cast<std::size_t>(pin - 1)];
  }
  void set(int pin, SignalLevel level) {
    CheckPin(pin);
    bits_[static_cast<std::size_t>(pin - 1)] = level;
  }

  const std::array<SignalLevel, kChassisPins>& bits() const { return bits_; }

  // "01101" style, pin 1 first.
  std::string ToString() const {
    std::string s;
    for (SignalLevel b : bits_) s.push_back(ToBool(b) ? '1' : '0');
    return s;
  }

  friend bool operator==(const PinVector&, const PinVector&) = default;

 private:
  static void CheckPin(int pin) {
    if (pin < 1 || pin > kChassisPins) {
      throw Error(ErrorCode::kInvalidPin,
                  "chassis pin out of range: " + std::to_string(pin));
    }
  }

  std::array<SignalLevel, kChassisPins> bits_;
};

struct InputTag {};
struct OutputTag {};
using InputVector = PinVector<InputTag>;
using OutputVector = PinVector<OutputTag>;

}  // namespace shia::logic

#endif  // SHIA_LOGIC_SIGNAL_H_

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

#ifndef SHIA_PROTOCOL_SERIAL_CONFIG_H_
#define SHIA_PROTOCOL_SERIAL_CONFIG_H_

#include <string>

namespace shia::protocol {

enum class Parity { kNone, kEven, kOdd };

// Line settings both ends must mirror. Inert on emulated transports apart
// from the equality check made when a session is initialised.
struct SerialConfig {
  int byte_size = 8;
  int stop_bits = 1;
  Parity parity = Parity::kNone;
  int nominal_baud = 9600;

  std::string ToString() const;

  friend bool operator==(const SerialConfig&, const SerialConfig&) = default;
};

}  // namespace shia::protocol

#endif  // SHIA_PROTOCOL_SERIAL_CONFIG_H_

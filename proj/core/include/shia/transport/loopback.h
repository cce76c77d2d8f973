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

#ifndef SHIA_TRANSPORT_LOOPBACK_H_
#define SHIA_TRANSPORT_LOOPBACK_H_

#include <memory>
#include <string>
#include <utility>

#include "shia/transport/endpoint.h"
#include "shia/transport/transcript.h"

namespace shia::transport {

struct LoopbackOptions {
  SerialConfig config;
  // Settings of the second endpoint when they should differ (handshake tests).
  std::optional<SerialConfig> second_config;
  Millis latency{0};
  // Optional shared recorder. Channels are named "<a>-><b>".
  std::shared_ptr<Transcript> transcript;
  std::string first_name = "a";
  std::string second_name = "b";
};

// Two cross-connected in-process endpoints. Bytes written at clock time t on
// one end become readable on the other at t + latency, in write order.
std::pair<Endpoint, Endpoint> OpenLoopback(Clock& clock,
                                           const LoopbackOptions& options);
inline std::pair<Endpoint, Endpoint> OpenLoopback(Clock& clock,
                                                  const SerialConfig& config,
                                                  Millis latency) {
  LoopbackOptions options;
  options.config = config;
  options.latency = latency;
  return OpenLoopback(clock, options);
}

}  // namespace shia::transport

#endif  // SHIA_TRANSPORT_LOOPBACK_H_

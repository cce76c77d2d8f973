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

#ifndef SHIA_MODEL_MODEL_SERVER_H_
#define SHIA_MODEL_MODEL_SERVER_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shia/logic/netlist.h"
#include "shia/logic/simulator.h"
#include "shia/model/harness.h"
#include "shia/transport/clock.h"
#include "shia/transport/endpoint.h"

namespace shia::model {

using transport::Millis;

struct ModelConfig {
  // Pause between transmitting a command and reading the reply.
  Millis delay{500};
  // How long the receive region keeps looking after an empty read before it
  // reports a reply timeout. Defaults to 2 x delay.
  std::optional<Millis> reply_timeout;
  // Poll interval while inside the reply-timeout window.
  Millis rx_poll{10};
  protocol::SerialConfig serial;

  Millis effective_reply_timeout() const {
    return reply_timeout.value_or(2 * delay);
  }
};

enum class SessionStatus {
  kOffline,       // MOM, no transport activity
  kReady,         // MRM, regions idle
  kAwaitingReply, // MRM, receive region in Delay/ReceiveChanges
  kReplyTimeout,  // MRM, last receive window ended with no frames
  kFault,         // MRM, transport failure or configuration mismatch
};
std::string_view SessionStatusName(SessionStatus status);

// Timestamped record of region activity. Timing checks read this.
struct ModelLogEntry {
  enum class Kind {
    kMode,
    kPanel,
    kTransmit,      // detail = frame
    kReceiveRead,   // detail = number of frames read
    kResponse,      // detail = frame applied to an output attribute
    kProtocolError,
    kReplyTimeout,
    kSessionFault,
  };

  Millis at{0};
  Kind kind = Kind::kMode;
  std::string detail;
};
std::string_view LogKindName(ModelLogEntry::Kind kind);

// Point-in-time copy for the operator panel.
struct ModelSnapshot {
  std::uint64_t version = 0;
  HarnessState state;
  // Every port of the in-process model; MOM only.
  std::optional<logic::NodeSnapshot> internals;
  SessionStatus status = SessionStatus::kOffline;
  std::string status_detail;
  std::uint64_t frames_sent = 0;
  std::uint64_t frames_received = 0;
  std::uint64_t reply_timeouts = 0;
  std::uint64_t protocol_errors = 0;
  std::uint64_t faults = 0;
  // A response frame has arrived since MRM was last entered.
  bool board_heard = false;
  // Last few log entries, oldest first. Not part of the view comparison.
  std::vector<ModelLogEntry> recent_log;
};

inline constexpr std::size_t kRecentLogSize = 8;

// The model-side server: owns the harness state, the in-process model used
// in MOM and, in MRM, the transmit and receive regions bound to an endpoint.
// Timer work runs on the clock; every public call is thread-safe. Observers
// are invoked synchronously after each state change with the server locked
// and must not call back into the server.
class ModelServer {
 public:
  ModelServer(logic::Netlist net, transport::Clock& clock,
              ModelConfig config = {});
  ~ModelServer();
  ModelServer(const ModelServer&) = delete;
  ModelServer& operator=(const ModelServer&) = delete;

  // Transport used by the MRM regions. May be attached or replaced at any
  // time; takes effect the next time the transmit region initialises.
  void AttachEndpoint(transport::Endpoint endpoint);

  // Operator events: PinHigh, PinLow, SetMode. Processed to completion,
  // including any resulting transmission.
  void Handle(const HarnessEvent& ev);

  ModelSnapshot snapshot() const;
  std::vector<ModelLogEntry> log() const;
  const ModelConfig& config() const;
  const logic::Netlist& netlist() const;

  using Observer = std::function<void(const ModelSnapshot&)>;
  void Subscribe(Observer observer);

 private:
  class Core;
  std::shared_ptr<Core> core_;
};

}  // namespace shia::model

#endif  // SHIA_MODEL_MODEL_SERVER_H_

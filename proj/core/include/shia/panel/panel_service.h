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

#ifndef SHIA_PANEL_PANEL_SERVICE_H_
#define SHIA_PANEL_PANEL_SERVICE_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "shia/logic/signal.h"
#include "shia/model/model_server.h"
#include "shia/transport/clock.h"
#include "shia/verify/karnaugh.h"
#include "shia/verify/sweep.h"

namespace shia::panel {

using transport::Millis;

// One decoded client message.
struct PanelCommand {
  enum class Kind { kSetPin, kSetMode, kRequestSnapshot, kRunSweep };

  Kind kind = Kind::kRequestSnapshot;
  int pin = 1;
  logic::SignalLevel level = logic::SignalLevel::kLow;
  model::Mode mode = model::Mode::kMom;

  friend bool operator==(const PanelCommand&, const PanelCommand&) = default;
};

// Parses {"type":"set_pin","pin":n,"level":0|1}, {"type":"set_mode","mode":
// "MOM"|"MRM"}, {"type":"request_snapshot"} and {"type":"run_sweep","mode":
// ...}. Levels may also be given as booleans. Throws kParse for anything
// else, kInvalidPin / kInvalidLevel for out-of-range values.
PanelCommand ParsePanelCommand(std::string_view text);

// {"type":"state","seq":...,"mode":...,"inputs":[5],"outputs":[5],
//  "internals":{...} (MOM only),"status":...,"log":[...],...}. The sequence
// number is the snapshot version.
std::string StateMessage(const model::ModelSnapshot& snapshot);
// {"type":"error","detail":...}
std::string ErrorMessage(std::string_view detail);
// {"type":"sweep","mode":...,"rows":[...],...}; the MRM form also carries
// the comparison against the model's own table.
std::string SweepMessage(model::Mode mode, const verify::TruthTable& table,
                         const std::optional<verify::Comparison>& comparison);

class PanelCore;

struct PanelOptions {
  // host:port; port 0 picks a free port.
  std::string bind = "127.0.0.1:8743";
  // Directory holding index.html and the rest of the panel UI. When unset
  // or missing a small built-in page is served.
  std::optional<std::filesystem::path> static_dir;
  // Whether a board is attached; set_mode MRM is refused otherwise.
  bool mrm_available = false;
  // Sizing for MRM sweeps started from the panel.
  Millis board_poll_period{100};
  Millis latency{0};
  std::function<std::optional<logic::InputVector>()> board_inputs;
};

// HTTP listener serving the panel assets and a websocket message channel.
// Every model snapshot change is pushed to all connected clients. Commands
// from all clients go through one queue and are applied in arrival order;
// a malformed command gets an error reply on its own connection only.
class PanelService {
 public:
  // Binds immediately. Throws kBindFailure.
  PanelService(model::ModelServer& server, transport::Clock& clock,
               PanelOptions options = {});
  ~PanelService();
  PanelService(const PanelService&) = delete;
  PanelService& operator=(const PanelService&) = delete;

  std::uint16_t port() const;
  std::string url() const;
  std::size_t client_count() const;

  // Stops accepting, closes clients and joins the service threads.
  void Stop();
  // Blocks until Stop() has been called.
  void Wait();

 private:
  std::shared_ptr<PanelCore> impl_;
};

// Built-in fallback page.
std::string_view FallbackPage();

}  // namespace shia::panel

#endif  // SHIA_PANEL_PANEL_SERVICE_H_

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

#ifndef SHIA_VERIFY_SWEEP_H_
#define SHIA_VERIFY_SWEEP_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shia/logic/netlist.h"
#include "shia/model/model_server.h"
#include "shia/transport/clock.h"
#include "shia/verify/truth_table.h"

namespace shia::verify {

using transport::Millis;

// Drives every vector through the model server in MOM and records the
// settled outputs. The server is switched to MOM first. Throws (with the
// offending vector in the message) if the model fails to settle.
TruthTable MomSweep(model::ModelServer& server, transport::Clock& clock);
// Same, on a private model server.
TruthTable MomSweep(const logic::Netlist& net);

// Per-row record of the three observations an operator makes: the pin
// toggles issued, the levels the board's input GPIOs then showed and the
// harness output lamps after the reply window.
struct RowObservation {
  int row = 0;
  std::vector<std::string> toggles;
  std::optional<InputVector> board_inputs;
  OutputVector lamps;
  bool failed = false;
  std::string reason;
};

struct MrmSession {
  model::ModelServer& model;
  transport::Clock& clock;
  // Board poll period and one-way link latency, used to size the wait.
  Millis poll_period{100};
  Millis latency{0};
  Millis margin{50};
  // Optional view of the board's input GPIO levels for the observation trail.
  std::function<std::optional<InputVector>()> board_inputs;

  // delay + one poll period + a round trip of latency + margin.
  Millis settle_time() const;
};

struct MrmSweepResult {
  TruthTable table;
  std::vector<RowObservation> observations;
};

// Switches the model server to MRM and walks the 32 vectors in ascending
// order, issuing only the pin events that differ from the current inputs
// and reading the output attributes once the reply window has passed.
// A row is marked failed when the session has faulted, when no response
// frame has been heard since MRM was entered, or when a reply timeout was
// raised while the row was pending.
MrmSweepResult MrmSweep(const MrmSession& session);

}  // namespace shia::verify

#endif  // SHIA_VERIFY_SWEEP_H_

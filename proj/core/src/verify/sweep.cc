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

#include "shia/verify/sweep.h"

#include "shia/error.h"

namespace shia::verify {
namespace {

using model::HarnessEvent;

// Pin events that move the harness inputs from `current` to `target`.
std::vector<HarnessEvent> Toggles(const InputVector& current,
                                  const InputVector& target) {
  std::vector<HarnessEvent> events;
  for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
    if (current.at(pin) != target.at(pin)) {
      events.push_back(HarnessEvent::Pin(pin, target.at(pin)));
    }
  }
  return events;
}

std::string Describe(const HarnessEvent& ev) {
  return "pin" + std::to_string(ev.pin) +
         (ev.kind == HarnessEvent::Kind::kPinHigh ? " ON" : " OFF");
}

}  // namespace

TruthTable MomSweep(model::ModelServer& server, transport::Clock& clock) {
  server.Handle(HarnessEvent::SetMode(model::Mode::kMom));
  TruthTable table;
  table.provenance = Provenance::kMom;
  table.netlist_id = server.netlist().name;
  for (auto& row : table.rows) {
    try {
      for (const auto& ev : Toggles(server.snapshot().state.input_attrs, row.inputs)) {
        server.Handle(ev);
      }
    } catch (const Error& e) {
      throw Error(e.code(), "MOM sweep aborted at vector " +
                                row.inputs.ToString() + ": " + e.what());
    }
    row.outputs = server.snapshot().state.output_attrs;
  }
  table.finished_at_ms = clock.now().count();
  return table;
}

TruthTable MomSweep(const logic::Netlist& net) {
  transport::VirtualClock clock;
  model::ModelServer server(net, clock);
  return MomSweep(server, clock);
}

Millis MrmSession::settle_time() const {
  return model.config().delay + poll_period + 2 * latency + margin;
}

MrmSweepResult MrmSweep(const MrmSession& session) {
  auto& server = session.model;
  const Millis wait = session.settle_time();

  MrmSweepResult result;
  result.table.provenance = Provenance::kMrm;
  result.table.netlist_id = server.netlist().name;

  if (server.snapshot().state.mode != model::Mode::kMrm) {
    server.Handle(HarnessEvent::SetMode(model::Mode::kMrm));
    transport::WaitFor(session.clock, wait);
  }

  for (std::size_t i = 0; i < result.table.rows.size(); ++i) {
    auto& row = result.table.rows[i];
    RowObservation obs;
    obs.row = static_cast<int>(i);

    const std::uint64_t timeouts_before = server.snapshot().reply_timeouts;
    for (const auto& ev : Toggles(server.snapshot().state.input_attrs, row.inputs)) {
      obs.toggles.push_back(Describe(ev));
      server.Handle(ev);
    }
    transport::WaitFor(session.clock, wait);

    const model::ModelSnapshot snap = server.snapshot();
    if (session.board_inputs) obs.board_inputs = session.board_inputs();
    obs.lamps = snap.state.output_attrs;
    row.outputs = snap.state.output_attrs;

    if (snap.status == model::SessionStatus::kFault) {
      obs.reason = "session fault: " + snap.status_detail;
    } else if (!snap.board_heard) {
      obs.reason = "no response from board";
    } else if (snap.reply_timeouts > timeouts_before) {
      obs.reason = "reply timeout";
    }
    obs.failed = !obs.reason.empty();
    row.failed = obs.failed;
    row.note = obs.reason;
    result.observations.push_back(std::move(obs));
  }
  result.table.finished_at_ms = session.clock.now().count();
  return result;
}

}  // namespace shia::verify

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

#ifndef SHIA_MODEL_HARNESS_H_
#define SHIA_MODEL_HARNESS_H_

#include <optional>
#include <string_view>
#include <vector>

#include "shia/logic/signal.h"
#include "shia/protocol/pin_message.h"

namespace shia::model {

using logic::InputVector;
using logic::OutputVector;
using logic::SignalLevel;

enum class Mode { kMom, kMrm };
std::string_view ModeName(Mode mode);
std::optional<Mode> ParseMode(std::string_view text);

enum class ListenState { kIdle, kMonitor };
enum class TxState { kInitialise, kWaitForChange, kSendChanges };
enum class RxState { kInitialise, kIdle, kDelay, kReceiveChanges };

std::string_view StateName(ListenState s);
std::string_view StateName(TxState s);
std::string_view StateName(RxState s);

struct HarnessEvent {
  enum class Kind { kPinHigh, kPinLow, kSetMode, kUpdateOutgoing, kWaitForReply };

  Kind kind = Kind::kPinHigh;
  int pin = 1;
  Mode mode = Mode::kMom;
  // UpdateOutgoing only: the frame that was placed in the outgoing buffer.
  std::optional<protocol::Frame> frame;

  static HarnessEvent PinHigh(int pin);
  static HarnessEvent PinLow(int pin);
  static HarnessEvent Pin(int pin, SignalLevel level);
  static HarnessEvent SetMode(Mode mode);
  static HarnessEvent UpdateOutgoing(protocol::Frame frame);
  static HarnessEvent WaitForReply();

  friend bool operator==(const HarnessEvent&, const HarnessEvent&) = default;
};

// Value state of the test-harness chart.
struct HarnessState {
  Mode mode = Mode::kMom;
  InputVector input_attrs;
  OutputVector output_attrs;
  // Pending command frame; set by an input event in MRM and cleared when
  // the transmit region sends it.
  std::optional<protocol::Frame> outgoing_message;
  ListenState listen_state = ListenState::kIdle;
  TxState tx_state = TxState::kInitialise;
  RxState rx_state = RxState::kInitialise;

  friend bool operator==(const HarnessState&, const HarnessState&) = default;
};

// Side effects requested by the listening region, applied by the server.
struct Effect {
  enum class Kind {
    kStimulateModel,   // settle the in-process model on input_attrs (MOM)
    kRaise,            // queue `event` for the transmit/receive regions
    kEnterMrm,         // initialise transmit and receive regions
    kEnterMom,         // deactivate regions, re-settle the model
  };

  Kind kind;
  HarnessEvent event{};

  friend bool operator==(const Effect&, const Effect&) = default;
};

struct PanelStep {
  HarnessState state;
  std::vector<Effect> effects;
};

// Listening region: records the pin in its attribute and then branches on
// the operating mode. In MOM the change goes straight to the model; in MRM
// the matching two-character frame is prepared and UpdateOutgoing raised.
// A redundant pin event is still transmitted in MRM. Switching into MRM
// prepares one frame per input pin so the board can be resynchronised.
PanelStep HandlePanelEvent(HarnessState state, const HarnessEvent& ev);

}  // namespace shia::model

#endif  // SHIA_MODEL_HARNESS_H_

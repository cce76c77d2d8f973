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

#include "shia/model/harness.h"

#include "shia/error.h"

namespace shia::model {
namespace {

void CheckPin(int pin) {
  if (pin < 1 || pin > logic::kChassisPins) {
    throw Error(ErrorCode::kInvalidPin,
                "harness pin out of range: " + std::to_string(pin));
  }
}

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kMom ? "MOM" : "MRM";
}

std::optional<Mode> ParseMode(std::string_view text) {
  if (text == "MOM" || text == "mom") return Mode::kMom;
  if (text == "MRM" || text == "mrm") return Mode::kMrm;
  return std::nullopt;
}

std::string_view StateName(ListenState s) {
  return s == ListenState::kIdle ? "Idle" : "Monitor";
}

std::string_view StateName(TxState s) {
  switch (s) {
    case TxState::kInitialise: return "Initialise";
    case TxState::kWaitForChange: return "WaitForChange";
    case TxState::kSendChanges: return "SendChanges";
  }
  return "?";
}

std::string_view StateName(RxState s) {
  switch (s) {
    case RxState::kInitialise: return "Initialise";
    case RxState::kIdle: return "Idle";
    case RxState::kDelay: return "Delay";
    case RxState::kReceiveChanges: return "ReceiveChanges";
  }
  return "?";
}

HarnessEvent HarnessEvent::PinHigh(int pin) {
  CheckPin(pin);
  return {Kind::kPinHigh, pin, Mode::kMom, std::nullopt};
}

HarnessEvent HarnessEvent::PinLow(int pin) {
  CheckPin(pin);
  return {Kind::kPinLow, pin, Mode::kMom, std::nullopt};
}

HarnessEvent HarnessEvent::Pin(int pin, SignalLevel level) {
  return level == SignalLevel::kHigh ? PinHigh(pin) : PinLow(pin);
}

HarnessEvent HarnessEvent::SetMode(Mode mode) {
  return {Kind::kSetMode, 1, mode, std::nullopt};
}

HarnessEvent HarnessEvent::UpdateOutgoing(protocol::Frame frame) {
  return {Kind::kUpdateOutgoing, 1, Mode::kMom, frame};
}

HarnessEvent HarnessEvent::WaitForReply() {
  return {Kind::kWaitForReply, 1, Mode::kMom, std::nullopt};
}

PanelStep HandlePanelEvent(HarnessState state, const HarnessEvent& ev) {
  PanelStep step;
  switch (ev.kind) {
    case HarnessEvent::Kind::kPinHigh:
    case HarnessEvent::Kind::kPinLow: {
      const SignalLevel level = ev.kind == HarnessEvent::Kind::kPinHigh
                                    ? SignalLevel::kHigh
                                    : SignalLevel::kLow;
      state.input_attrs.set(ev.pin, level);
      if (state.mode == Mode::kMom) {
        step.effects.push_back({Effect::Kind::kStimulateModel, {}});
      } else {
        const protocol::Frame frame = protocol::EncodePinMessage(ev.pin, level);
        state.outgoing_message = frame;
        step.effects.push_back(
            {Effect::Kind::kRaise, HarnessEvent::UpdateOutgoing(frame)});
      }
      break;
    }
    case HarnessEvent::Kind::kSetMode:
      if (ev.mode == state.mode) break;
      state.mode = ev.mode;
      if (ev.mode == Mode::kMrm) {
        step.effects.push_back({Effect::Kind::kEnterMrm, {}});
        for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
          const protocol::Frame frame =
              protocol::EncodePinMessage(pin, state.input_attrs.at(pin));
          state.outgoing_message = frame;
          step.effects.push_back(
              {Effect::Kind::kRaise, HarnessEvent::UpdateOutgoing(frame)});
        }
      } else {
        state.outgoing_message.reset();
        step.effects.push_back({Effect::Kind::kEnterMom, {}});
      }
      break;
    case HarnessEvent::Kind::kUpdateOutgoing:
    case HarnessEvent::Kind::kWaitForReply:
      // Internal events belong to the transmit and receive regions.
      throw Error(ErrorCode::kConfig,
                  "internal harness event delivered to the listening region");
  }
  step.state = std::move(state);
  return step;
}

}  // namespace shia::model

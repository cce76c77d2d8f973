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

#include "shia/board/board.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "shia/error.h"
#include "shia/logic/oracle.h"

namespace shia::board {
namespace {

std::size_t Slot(int pin) {
  if (pin < 1 || pin > logic::kChassisPins) {
    throw Error(ErrorCode::kInvalidPin, "pin out of range: " + std::to_string(pin));
  }
  return static_cast<std::size_t>(pin - 1);
}

int ParsePin(const std::string& text, const std::string& spec) {
  try {
    std::size_t used = 0;
    const int pin = std::stoi(text, &used);
    if (used == text.size()) return pin;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kInvalidFault, "bad pin in fault '" + spec + "'");
}

}  // namespace

GpioMap::GpioMap(std::array<int, 5> input_gpio, std::array<int, 5> output_gpio)
    : input_gpio_(input_gpio), output_gpio_(output_gpio) {
  std::set<int> seen;
  for (int g : input_gpio_) seen.insert(g);
  for (int g : output_gpio_) seen.insert(g);
  const bool positive =
      std::all_of(seen.begin(), seen.end(), [](int g) { return g > 0; });
  if (seen.size() != 10 || !positive) {
    throw Error(ErrorCode::kConfig,
                "GPIO map must assign ten distinct positive GPIO numbers");
  }
}

int GpioMap::InputGpio(int pin) const { return input_gpio_[Slot(pin)]; }
int GpioMap::OutputGpio(int pin) const { return output_gpio_[Slot(pin)]; }

std::optional<int> GpioMap::InputPinOf(int gpio) const {
  for (std::size_t i = 0; i < input_gpio_.size(); ++i) {
    if (input_gpio_[i] == gpio) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::optional<int> GpioMap::OutputPinOf(int gpio) const {
  for (std::size_t i = 0; i < output_gpio_.size(); ++i) {
    if (output_gpio_[i] == gpio) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

FaultSpec FaultSpec::Parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() == 2) {
    const int pin = ParsePin(parts[1], text);
    if (parts[0] == "stuck_low") return StuckLow(pin);
    if (parts[0] == "stuck_high") return StuckHigh(pin);
    if (parts[0] == "inverted") return Inverted(pin);
  } else if (parts.size() == 3 &&
             (parts[0] == "swap_wiring" || parts[0] == "swap")) {
    return SwapWiring(ParsePin(parts[1], text), ParsePin(parts[2], text));
  }
  throw Error(ErrorCode::kInvalidFault,
              "unknown fault '" + text +
                  "' (expected stuck_low:N, stuck_high:N, inverted:N or "
                  "swap_wiring:A:B)");
}

std::string FaultSpec::ToString() const {
  switch (kind) {
    case Kind::kStuckLow: return "stuck_low:" + std::to_string(pin);
    case Kind::kStuckHigh: return "stuck_high:" + std::to_string(pin);
    case Kind::kInverted: return "inverted:" + std::to_string(pin);
    case Kind::kSwapWiring:
      return "swap_wiring:" + std::to_string(pin) + ":" + std::to_string(other_pin);
  }
  return "?";
}

std::vector<int> FaultSpec::pins() const {
  if (kind == Kind::kSwapWiring) return {pin, other_pin};
  return {pin};
}

OutputVector ApplyFaults(const std::vector<FaultSpec>& faults, OutputVector out) {
  for (const auto& f : faults) {
    switch (f.kind) {
      case FaultSpec::Kind::kStuckLow:
        out.set(f.pin, SignalLevel::kLow);
        break;
      case FaultSpec::Kind::kStuckHigh:
        out.set(f.pin, SignalLevel::kHigh);
        break;
      case FaultSpec::Kind::kInverted:
        out.set(f.pin, logic::Not(out.at(f.pin)));
        break;
      case FaultSpec::Kind::kSwapWiring: {
        const SignalLevel a = out.at(f.pin);
        out.set(f.pin, out.at(f.other_pin));
        out.set(f.other_pin, a);
        break;
      }
    }
  }
  return out;
}

Board::Board(logic::Netlist circuit, GpioMap map)
    : circuit_(std::move(circuit)), map_(map) {
  logic::RequireValid(circuit_);
  for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
    gpio_[map_.InputGpio(pin)] = SignalLevel::kLow;
    gpio_[map_.OutputGpio(pin)] = SignalLevel::kLow;
  }
  Refresh();
}

InputVector Board::inputs() const {
  InputVector v;
  for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
    v.set(pin, gpio_.at(map_.InputGpio(pin)));
  }
  return v;
}

OutputVector Board::outputs() const {
  OutputVector v;
  for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
    v.set(pin, gpio_.at(map_.OutputGpio(pin)));
  }
  return v;
}

SignalLevel Board::gpio(int number) const {
  auto it = gpio_.find(number);
  if (it == gpio_.end()) {
    throw Error(ErrorCode::kInvalidPin,
                "GPIO" + std::to_string(number) + " is not mapped");
  }
  return it->second;
}

std::vector<PinMessage> Board::Refresh() {
  const OutputVector before = outputs();
  const OutputVector after =
      ApplyFaults(faults_, logic::OracleEval(circuit_, inputs()));
  std::vector<PinMessage> changed;
  for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
    gpio_[map_.OutputGpio(pin)] = after.at(pin);
    if (after.at(pin) != before.at(pin)) {
      changed.push_back({pin, after.at(pin), protocol::Direction::kResponse});
    }
  }
  return changed;
}

CommandOutcome Board::ApplyCommand(const PinMessage& msg) {
  CommandOutcome outcome;
  const std::string frame = protocol::Encode(msg).str();
  if (msg.pin < 1 || msg.pin > logic::kChassisPins) {
    outcome.rejected = true;
    outcome.log_line = "RX " + frame + " -> protocol-error: pin not mapped";
    return outcome;
  }
  const int gpio = map_.InputGpio(msg.pin);
  gpio_[gpio] = msg.level;
  outcome.log_line = "RX " + frame + " -> GPIO" + std::to_string(gpio) + " " +
                     logic::LevelName(msg.level);
  outcome.responses = Refresh();
  return outcome;
}

std::vector<PinMessage> Board::InjectFault(const FaultSpec& fault) {
  for (int pin : fault.pins()) {
    if (pin < 1 || pin > logic::kChassisPins) {
      throw Error(ErrorCode::kInvalidFault,
                  "fault pin out of range in " + fault.ToString());
    }
  }
  if (fault.kind == FaultSpec::Kind::kSwapWiring && fault.pin == fault.other_pin) {
    throw Error(ErrorCode::kInvalidFault, "swap_wiring needs two distinct pins");
  }
  for (const auto& existing : faults_) {
    for (int a : existing.pins()) {
      for (int b : fault.pins()) {
        if (a == b) {
          throw Error(ErrorCode::kDuplicateFault,
                      "output pin " + std::to_string(a) + " already has fault " +
                          existing.ToString());
        }
      }
    }
  }
  faults_.push_back(fault);
  return Refresh();
}

std::vector<PinMessage> Board::FullStateReport() const {
  std::vector<PinMessage> report;
  const OutputVector out = outputs();
  for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
    report.push_back({pin, out.at(pin), protocol::Direction::kResponse});
  }
  return report;
}

std::string Board::LedView() const {
  std::string view;
  const OutputVector out = outputs();
  for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
    view.push_back(logic::ToBool(out.at(pin)) ? '*' : '.');
  }
  return view;
}

}  // namespace shia::board

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

#ifndef SHIA_BOARD_BOARD_H_
#define SHIA_BOARD_BOARD_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shia/logic/netlist.h"
#include "shia/logic/signal.h"
#include "shia/protocol/pin_message.h"

namespace shia::board {

using logic::InputVector;
using logic::OutputVector;
using logic::SignalLevel;
using protocol::PinMessage;

// Bijection between virtual GPIO numbers and chassis pins. Inputs 1..5 sit
// on GPIO 21..25; outputs default to GPIO 1..5.
class GpioMap {
 public:
  GpioMap() = default;
  // Throws kConfig unless all ten GPIO numbers are distinct and positive.
  GpioMap(std::array<int, 5> input_gpio, std::array<int, 5> output_gpio);

  int InputGpio(int pin) const;
  int OutputGpio(int pin) const;
  std::optional<int> InputPinOf(int gpio) const;
  std::optional<int> OutputPinOf(int gpio) const;

  const std::array<int, 5>& input_gpio() const { return input_gpio_; }
  const std::array<int, 5>& output_gpio() const { return output_gpio_; }

 private:
  std::array<int, 5> input_gpio_{21, 22, 23, 24, 25};
  std::array<int, 5> output_gpio_{1, 2, 3, 4, 5};
};

// Deliberate defect applied to the board's output pins after evaluation.
struct FaultSpec {
  enum class Kind { kStuckLow, kStuckHigh, kInverted, kSwapWiring };

  Kind kind = Kind::kStuckLow;
  int pin = 1;
  int other_pin = 0;  // kSwapWiring only

  static FaultSpec StuckLow(int pin) { return {Kind::kStuckLow, pin, 0}; }
  static FaultSpec StuckHigh(int pin) { return {Kind::kStuckHigh, pin, 0}; }
  static FaultSpec Inverted(int pin) { return {Kind::kInverted, pin, 0}; }
  static FaultSpec SwapWiring(int a, int b) { return {Kind::kSwapWiring, a, b}; }

  // "stuck_low:3", "stuck_high:2", "inverted:1", "swap_wiring:1:2".
  static FaultSpec Parse(const std::string& text);
  std::string ToString() const;
  std::vector<int> pins() const;

  friend bool operator==(const FaultSpec&, const FaultSpec&) = default;
};

// Applies `faults` in order to a fault-free output vector.
OutputVector ApplyFaults(const std::vector<FaultSpec>& faults, OutputVector out);

struct CommandOutcome {
  std::vector<PinMessage> responses;
  // "RX 21 -> GPIO22 HIGH" style line, or the protocol error.
  std::string log_line;
  bool rejected = false;
};

// The emulated hardware: GPIO bank, the circuit wired to it and any active
// faults. The circuit is evaluated with the pure Boolean oracle.
class Board {
 public:
  explicit Board(logic::Netlist circuit, GpioMap map = {});

  // Updates the mapped input GPIO, re-evaluates the circuit and returns one
  // response per output pin whose level changed, in pin order.
  CommandOutcome ApplyCommand(const PinMessage& msg);

  // Throws kDuplicateFault if a pin already carries a fault and kInvalidFault
  // for out-of-range pins. Output GPIOs are refreshed immediately; the
  // returned responses report any level that changed as a result.
  std::vector<PinMessage> InjectFault(const FaultSpec& fault);

  // Current level of every output pin, pins 1..5.
  std::vector<PinMessage> FullStateReport() const;

  InputVector inputs() const;
  OutputVector outputs() const;
  SignalLevel gpio(int number) const;
  const std::map<int, SignalLevel>& gpio_levels() const { return gpio_; }
  const std::vector<FaultSpec>& faults() const { return faults_; }
  const GpioMap& map() const { return map_; }
  const logic::Netlist& circuit() const { return circuit_; }

  // Output LEDs, pin 1 first: '*' lit, '.' dark.
  std::string LedView() const;

 private:
  std::vector<PinMessage> Refresh();

  logic::Netlist circuit_;
  GpioMap map_;
  std::map<int, SignalLevel> gpio_;
  std::vector<FaultSpec> faults_;
};

}  // namespace shia::board

#endif  // SHIA_BOARD_BOARD_H_

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

#ifndef SHIA_LOGIC_GATE_H_
#define SHIA_LOGIC_GATE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shia/logic/signal.h"

namespace shia::logic {

enum class GateKind { kNand, kAnd, kOr, kNot, kXor, kSplitter };

std::string_view GateKindName(GateKind kind);
std::optional<GateKind> ParseGateKind(std::string_view name);

int InputArity(GateKind kind);
int OutputArity(GateKind kind);

// Boolean function of a single-output gate. Splitters are not gates in this
// sense and are rejected along with any arity mismatch.
SignalLevel EvalGate(GateKind kind, std::span<const SignalLevel> inputs);

// One logic block as an executable chart: the input latches are the
// monitoring region, the output levels are the OutputLow/OutputHigh region.
struct BlockInstance {
  std::string id;
  GateKind kind = GateKind::kNand;
  std::vector<SignalLevel> input_state;
  std::vector<SignalLevel> output_state;

  // Power-on: every latch and output low. Call Reevaluate() to compute the
  // settled output for that input state.
  static BlockInstance PowerOn(std::string id, GateKind kind);

  friend bool operator==(const BlockInstance&, const BlockInstance&) = default;
};

// Incoming signal on input port `port` (1-based).
struct PortEvent {
  int port = 1;
  SignalLevel level = SignalLevel::kLow;
};

// Signal leaving output port `port` (1-based).
struct EmittedEvent {
  int port = 1;
  SignalLevel level = SignalLevel::kLow;

  friend bool operator==(const EmittedEvent&, const EmittedEvent&) = default;
};

struct StepResult {
  BlockInstance block;
  std::vector<EmittedEvent> emitted;
};

// Updates the latch addressed by `event`; throws kUnknownPort when the block
// has no such input.
void LatchInput(BlockInstance& block, const PortEvent& event);

// Guarded re-evaluation of the output region. Returns one event per output
// whose level changed, in output-port order.
std::vector<EmittedEvent> Reevaluate(BlockInstance& block);

// LatchInput followed by Reevaluate, as a value transformation.
StepResult StepBlock(BlockInstance block, const PortEvent& event);

}  // namespace shia::logic

#endif  // SHIA_LOGIC_GATE_H_

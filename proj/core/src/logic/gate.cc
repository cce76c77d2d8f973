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

#include "shia/logic/gate.h"

#include <array>
#include <utility>

namespace shia::logic {
namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int inputs;
  int outputs;
};

constexpr std::array<KindInfo, 6> kKinds = {{
    {GateKind::kNand, "NAND", 2, 1},
    {GateKind::kAnd, "AND", 2, 1},
    {GateKind::kOr, "OR", 2, 1},
    {GateKind::kNot, "NOT", 1, 1},
    {GateKind::kXor, "XOR", 2, 1},
    {GateKind::kSplitter, "SPLITTER", 1, 2},
}};

const KindInfo& Info(GateKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info;
  }
  throw Error(ErrorCode::kInvalidArity, "unknown gate kind");
}

}  // namespace

std::string_view GateKindName(GateKind kind) { return Info(kind).name; }

std::optional<GateKind> ParseGateKind(std::string_view name) {
  for (const auto& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

int InputArity(GateKind kind) { return Info(kind).inputs; }
int OutputArity(GateKind kind) { return Info(kind).outputs; }

SignalLevel EvalGate(GateKind kind, std::span<const SignalLevel> inputs) {
  if (kind == GateKind::kSplitter) {
    throw Error(ErrorCode::kInvalidArity,
                "SPLITTER has two outputs and no single Boolean function");
  }
  if (static_cast<int>(inputs.size()) != InputArity(kind)) {
    throw Error(ErrorCode::kInvalidArity,
                std::string(GateKindName(kind)) + " expects " +
                    std::to_string(InputArity(kind)) + " inputs, got " +
                    std::to_string(inputs.size()));
  }
  const bool a = ToBool(inputs[0]);
  switch (kind) {
    case GateKind::kNot:
      return FromBool(!a);
    case GateKind::kNand:
      // High for every combination except both inputs high.
      return FromBool(!(a && ToBool(inputs[1])));
    case GateKind::kAnd:
      return FromBool(a && ToBool(inputs[1]));
    case GateKind::kOr:
      return FromBool(a || ToBool(inputs[1]));
    case GateKind::kXor:
      return FromBool(a != ToBool(inputs[1]));
    case GateKind::kSplitter:
      break;
  }
  throw Error(ErrorCode::kInvalidArity, "unreachable gate kind");
}

BlockInstance BlockInstance::PowerOn(std::string id, GateKind kind) {
  BlockInstance block;
  block.id = std::move(id);
  block.kind = kind;
  block.input_state.assign(static_cast<std::size_t>(InputArity(kind)),
                           SignalLevel::kLow);
  block.output_state.assign(static_cast<std::size_t>(OutputArity(kind)),
                            SignalLevel::kLow);
  return block;
}

void LatchInput(BlockInstance& block, const PortEvent& event) {
  if (event.port < 1 ||
      event.port > static_cast<int>(block.input_state.size())) {
    throw Error(ErrorCode::kUnknownPort,
                block.id + ".in" + std::to_string(event.port) +
                    " does not exist on " +
                    std::string(GateKindName(block.kind)));
  }
  block.input_state[static_cast<std::size_t>(event.port - 1)] = event.level;
}

std::vector<EmittedEvent> Reevaluate(BlockInstance& block) {
  std::vector<SignalLevel> next;
  if (block.kind == GateKind::kSplitter) {
    next.assign(2, block.input_state.at(0));
  } else {
    next.push_back(EvalGate(block.kind, block.input_state));
  }
  std::vector<EmittedEvent> emitted;
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i] != block.output_state[i]) {
      block.output_state[i] = next[i];
      emitted.push_back({static_cast<int>(i) + 1, next[i]});
    }
  }
  return emitted;
}

StepResult StepBlock(BlockInstance block, const PortEvent& event) {
  LatchInput(block, event);
  auto emitted = Reevaluate(block);
  return {std::move(block), std::move(emitted)};
}

}  // namespace shia::logic

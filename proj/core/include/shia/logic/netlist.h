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

#ifndef SHIA_LOGIC_NETLIST_H_
#define SHIA_LOGIC_NETLIST_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shia/error.h"
#include "shia/logic/gate.h"

namespace shia::logic {

inline constexpr std::string_view kExternalBlock = "ext";

// `<block>.<in|out><N>`. For the pseudo-block "ext", inN is a chassis input
// pin (a signal source) and outN a chassis output pin (a signal sink).
struct PortRef {
  enum class Side { kIn, kOut };

  std::string block;
  Side side = Side::kIn;
  int index = 1;

  bool external() const { return block == kExternalBlock; }
  // True if signals leave this port into a connector.
  bool is_source() const {
    return external() ? side == Side::kIn : side == Side::kOut;
  }

  std::string ToString() const;
  static std::optional<PortRef> Parse(std::string_view text);

  friend bool operator==(const PortRef&, const PortRef&) = default;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

struct BlockSpec {
  std::string id;
  GateKind kind = GateKind::kNand;

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

struct Connector {
  PortRef from;
  PortRef to;

  friend bool operator==(const Connector&, const Connector&) = default;
};

// Structural description of a chassis: the blocks, the point-to-point
// connectors between their ports, and the declared external pins.
struct Netlist {
  std::string name;
  std::string description;
  std::vector<BlockSpec> blocks;
  std::vector<Connector> connectors;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  std::optional<std::size_t> FindBlock(std::string_view id) const;

  friend bool operator==(const Netlist&, const Netlist&) = default;
};

struct Violation {
  enum class Kind {
    kDuplicateBlock,
    kReservedId,
    kPinCount,
    kBadPin,
    kUnknownPort,
    kWrongDirection,
    kFanOut,
    kMissingDriver,
    kMultipleDrivers,
    kCycle,
  };

  Kind kind;
  // Offending port, block, or cycle, e.g. "nand_a.out1" or "a -> b -> a".
  std::string subject;
  std::string message;
};

std::string_view ViolationKindName(Violation::Kind kind);

// Empty iff the netlist is structurally sound: single driver per sink,
// single destination per source (fan-out only through splitters), acyclic,
// and exactly five declared inputs and outputs.
std::vector<Violation> ValidateNetlist(const Netlist& net);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Throws ValidationError when ValidateNetlist reports anything.
void RequireValid(const Netlist& net);

// Blocks in an order where every block follows all blocks driving it, and
// the depth of each block (longest connector path from the external inputs).
// Requires an acyclic netlist.
struct BlockOrder {
  std::vector<std::size_t> order;
  std::vector<int> rank;
};
BlockOrder RankBlocks(const Netlist& net);

}  // namespace shia::logic

#endif  // SHIA_LOGIC_NETLIST_H_

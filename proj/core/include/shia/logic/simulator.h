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

#ifndef SHIA_LOGIC_SIMULATOR_H_
#define SHIA_LOGIC_SIMULATOR_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "shia/logic/gate.h"
#include "shia/logic/netlist.h"
#include "shia/logic/signal.h"

namespace shia::logic {

// Level of every port in the model: external pins first, then each block's
// input latches and outputs in declaration order.
struct NodeSnapshot {
  std::vector<std::pair<std::string, SignalLevel>> ports;

  friend bool operator==(const NodeSnapshot&, const NodeSnapshot&) = default;
};

struct SettleResult {
  OutputVector outputs;
  NodeSnapshot nodes;
  // Connector deliveries processed by the last settle pass.
  std::size_t events = 0;
};

// Executes the netlist as a network of block charts. Signal changes travel
// over connectors as events and are processed to quiescence with zero gate
// delay. Events are bucketed by the depth of the destination block; within a
// bucket they are taken in arrival order, and all events addressed to one
// block are latched (in port order) before that block re-evaluates once.
// Each connector therefore carries at most one event per settle pass.
class Simulator {
 public:
  // Validates `net`, powers every block on with low latches and settles once
  // with all external inputs low.
  explicit Simulator(Netlist net);

  // Drives the external inputs to `inputs` and propagates until quiescent.
  // Throws kNonQuiescent if more than 10x the connector count events are
  // processed.
  SettleResult Settle(const InputVector& inputs);

  // Outputs and node levels of the current quiescent state.
  SettleResult Current() const;

  const Netlist& netlist() const { return net_; }
  const std::vector<BlockInstance>& blocks() const { return blocks_; }
  const InputVector& inputs() const { return inputs_; }

 private:
  struct Destination {
    bool external = false;
    std::size_t block = 0;  // block index, or output pin - 1 when external
    int port = 1;
  };
  struct Delivery {
    std::size_t block;
    int port;
    SignalLevel level;
  };

  void Route(const Destination& dest, SignalLevel level,
             std::vector<std::vector<Delivery>>& buckets);
  SettleResult Propagate(std::vector<std::vector<Delivery>>& buckets,
                         std::size_t events_so_far, bool evaluate_all);
  NodeSnapshot Snapshot() const;

  Netlist net_;
  BlockOrder order_;
  std::vector<BlockInstance> blocks_;
  // Destination of each block output port (indexed [block][port-1]) and of
  // each external input pin; empty when the source is left unconnected.
  std::vector<std::vector<std::vector<Destination>>> block_fanout_;
  std::vector<std::vector<Destination>> input_fanout_;
  InputVector inputs_;
  OutputVector outputs_;
  std::size_t event_cap_ = 0;
  std::size_t last_events_ = 0;
};

// Settles a fresh power-on instance of `net` with inputs `v`.
SettleResult Settle(const Netlist& net, const InputVector& v);

}  // namespace shia::logic

#endif  // SHIA_LOGIC_SIMULATOR_H_

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

#ifndef SHIA_TESTS_SUPPORT_RANDOM_NETLIST_H_
#define SHIA_TESTS_SUPPORT_RANDOM_NETLIST_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "shia/logic/netlist.h"

namespace shia::testing {

// Builds a random valid five-in/five-out netlist with at most `max_blocks`
// blocks (max_blocks >= 1). Fan-out is routed through splitters so every
// output port drives at most one connector.
inline logic::Netlist RandomNetlist(std::mt19937& rng, int max_blocks = 12) {
  using logic::GateKind;
  using logic::PortRef;
  logic::Netlist net;
  net.name = "random";
  for (int i = 1; i <= 5; ++i) {
    net.inputs.push_back("ext.in" + std::to_string(i));
    net.outputs.push_back("ext.out" + std::to_string(i));
  }

  std::vector<PortRef> pool;
  for (int i = 1; i <= 5; ++i) pool.push_back({"ext", PortRef::Side::kIn, i});

  auto take = [&]() {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const std::size_t i = pick(rng);
    PortRef port = pool[i];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    return port;
  };
  int counter = 0;
  auto add_block = [&](GateKind kind) {
    const std::string id = "b" + std::to_string(counter++);
    net.blocks.push_back({id, kind});
    for (int i = 1; i <= logic::InputArity(kind); ++i) {
      net.connectors.push_back({take(), {id, PortRef::Side::kIn, i}});
    }
    for (int i = 1; i <= logic::OutputArity(kind); ++i) {
      pool.push_back({id, PortRef::Side::kOut, i});
    }
  };

  const int budget = std::uniform_int_distribution<int>(1, max_blocks)(rng);
  const GateKind kinds[] = {GateKind::kNand, GateKind::kAnd, GateKind::kOr,
                            GateKind::kXor,  GateKind::kNot, GateKind::kSplitter};
  std::uniform_int_distribution<int> kind_pick(0, 5);
  while (static_cast<int>(net.blocks.size()) < budget) {
    const int remaining = budget - static_cast<int>(net.blocks.size());
    GateKind kind = kinds[kind_pick(rng)];
    const int arity = logic::InputArity(kind);
    const int after = static_cast<int>(pool.size()) - arity +
                      logic::OutputArity(kind);
    // Keep enough free ports (or splitter budget) to drive five outputs.
    if (static_cast<int>(pool.size()) < arity || after + (remaining - 1) < 5) {
      kind = GateKind::kSplitter;
    }
    add_block(kind);
  }
  while (pool.size() < 5) add_block(GateKind::kSplitter);

  std::shuffle(pool.begin(), pool.end(), rng);
  for (int i = 1; i <= 5; ++i) {
    net.connectors.push_back(
        {pool[static_cast<std::size_t>(i - 1)], {"ext", PortRef::Side::kOut, i}});
  }
  return net;
}

}  // namespace shia::testing

#endif  // SHIA_TESTS_SUPPORT_RANDOM_NETLIST_H_

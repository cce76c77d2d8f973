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

#include "shia/logic/oracle.h"

#include <deque>
#include <map>
#include <string>

namespace shia::logic {
namespace {

bool Apply(GateKind kind, const std::vector<bool>& in) {
  switch (kind) {
    case GateKind::kNand: return !(in[0] && in[1]);
    case GateKind::kAnd: return in[0] && in[1];
    case GateKind::kOr: return in[0] || in[1];
    case GateKind::kXor: return in[0] != in[1];
    case GateKind::kNot: return !in[0];
    case GateKind::kSplitter: return in[0];
  }
  return false;
}

}  // namespace

OutputVector OracleEval(const Netlist& net, const InputVector& v) {
  RequireValid(net);

  // driver[sink port] = source port
  std::map<std::string, std::string> driver;
  // Block inputs driven by other blocks stay pending until the driver has
  // been evaluated; external pins are known up front.
  std::map<std::string, int> waiting;
  std::map<std::string, std::vector<std::string>> consumers;
  for (const auto& b : net.blocks) waiting[b.id] = 0;
  for (const auto& c : net.connectors) {
    driver[c.to.ToString()] = c.from.ToString();
    if (!c.from.external() && !c.to.external()) {
      consumers[c.from.block].push_back(c.to.block);
      ++waiting[c.to.block];
    }
  }

  std::map<std::string, bool> value;
  for (int pin = 1; pin <= kChassisPins; ++pin) {
    value["ext.in" + std::to_string(pin)] = ToBool(v.at(pin));
  }

  std::deque<std::string> ready;
  for (const auto& b : net.blocks) {
    if (waiting[b.id] == 0) ready.push_back(b.id);
  }
  while (!ready.empty()) {
    const std::string id = ready.front();
    ready.pop_front();
    const GateKind kind = net.blocks[*net.FindBlock(id)].kind;
    std::vector<bool> in;
    for (int i = 1; i <= InputArity(kind); ++i) {
      in.push_back(value.at(driver.at(id + ".in" + std::to_string(i))));
    }
    const bool out = Apply(kind, in);
    for (int i = 1; i <= OutputArity(kind); ++i) {
      value[id + ".out" + std::to_string(i)] = out;
    }
    for (const auto& next : consumers[id]) {
      if (--waiting[next] == 0) ready.push_back(next);
    }
  }

  OutputVector out;
  for (int pin = 1; pin <= kChassisPins; ++pin) {
    out.set(pin, FromBool(value.at(driver.at("ext.out" + std::to_string(pin)))));
  }
  return out;
}

}  // namespace shia::logic

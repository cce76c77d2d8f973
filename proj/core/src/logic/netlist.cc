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

#include "shia/logic/netlist.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace shia::logic {
namespace {

// Port exists on its block (or is a declared external pin).
bool PortExists(const Netlist& net, const PortRef& port) {
  if (port.external()) {
    const auto& pins = port.side == PortRef::Side::kIn ? net.inputs : net.outputs;
    return std::find(pins.begin(), pins.end(), port.ToString()) != pins.end();
  }
  auto idx = net.FindBlock(port.block);
  if (!idx) return false;
  const GateKind kind = net.blocks[*idx].kind;
  const int arity =
      port.side == PortRef::Side::kIn ? InputArity(kind) : OutputArity(kind);
  return port.index >= 1 && port.index <= arity;
}

void CheckPins(const Netlist& net, PortRef::Side side,
               std::vector<Violation>& out) {
  const auto& pins = side == PortRef::Side::kIn ? net.inputs : net.outputs;
  const char* label = side == PortRef::Side::kIn ? "inputs" : "outputs";
  if (static_cast<int>(pins.size()) != kChassisPins) {
    out.push_back({Violation::Kind::kPinCount, label,
                   std::string("expected 5 external ") + label + ", found " +
                       std::to_string(pins.size())});
  }
  std::set<std::string> seen;
  for (const auto& name : pins) {
    auto ref = PortRef::Parse(name);
    if (!ref || !ref->external() || ref->side != side || ref->index < 1 ||
        ref->index > kChassisPins) {
      out.push_back({Violation::Kind::kBadPin, name,
                     "not a valid external " + std::string(label) + " pin"});
      continue;
    }
    if (!seen.insert(name).second) {
      out.push_back({Violation::Kind::kBadPin, name, "pin declared twice"});
    }
  }
}

// Reports each elementary cycle reached by DFS back edges once.
void FindCycles(const Netlist& net, std::vector<Violation>& out) {
  const std::size_t n = net.blocks.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& c : net.connectors) {
    if (c.from.external() || c.to.external()) continue;
    auto a = net.FindBlock(c.from.block);
    auto b = net.FindBlock(c.to.block);
    if (a && b) succ[*a].push_back(*b);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  enum Color { kWhite, kGrey, kBlack };
  std::vector<Color> color(n, kWhite);
  std::vector<std::size_t> stack;
  std::set<std::vector<std::size_t>> reported;

  std::function<void(std::size_t)> visit = [&](std::size_t u) {
    color[u] = kGrey;
    stack.push_back(u);
    for (std::size_t v : succ[u]) {
      if (color[v] == kWhite) {
        visit(v);
      } else if (color[v] == kGrey) {
        auto start = std::find(stack.begin(), stack.end(), v);
        std::vector<std::size_t> cycle(start, stack.end());
        auto canon = cycle;
        std::rotate(canon.begin(), std::min_element(canon.begin(), canon.end()),
                    canon.end());
        if (!reported.insert(canon).second) continue;
        std::string path;
        for (std::size_t b : cycle) path += net.blocks[b].id + " -> ";
        path += net.blocks[v].id;
        out.push_back({Violation::Kind::kCycle, path, "connector cycle " + path});
      }
    }
    stack.pop_back();
    color[u] = kBlack;
  };
  for (std::size_t u = 0; u < n; ++u) {
    if (color[u] == kWhite) visit(u);
  }
}

}  // namespace

std::string PortRef::ToString() const {
  return block + (side == Side::kIn ? ".in" : ".out") + std::to_string(index);
}

std::optional<PortRef> PortRef::Parse(std::string_view text) {
  const auto dot = text.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return std::nullopt;
  PortRef ref;
  ref.block = std::string(text.substr(0, dot));
  std::string_view tail = text.substr(dot + 1);
  if (tail.starts_with("in")) {
    ref.side = Side::kIn;
    tail.remove_prefix(2);
  } else if (tail.starts_with("out")) {
    ref.side = Side::kOut;
    tail.remove_prefix(3);
  } else {
    return std::nullopt;
  }
  if (tail.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(),
                                   ref.index);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || ref.index < 1) {
    return std::nullopt;
  }
  return ref;
}

std::optional<std::size_t> Netlist::FindBlock(std::string_view id) const {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].id == id) return i;
  }
  return std::nullopt;
}

std::string_view ViolationKindName(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kDuplicateBlock: return "duplicate-block";
    case Violation::Kind::kReservedId: return "reserved-id";
    case Violation::Kind::kPinCount: return "pin-count";
    case Violation::Kind::kBadPin: return "bad-pin";
    case Violation::Kind::kUnknownPort: return "unknown-port";
    case Violation::Kind::kWrongDirection: return "wrong-direction";
    case Violation::Kind::kFanOut: return "fan-out";
    case Violation::Kind::kMissingDriver: return "missing-driver";
    case Violation::Kind::kMultipleDrivers: return "multiple-drivers";
    case Violation::Kind::kCycle: return "cycle";
  }
  return "unknown";
}

std::vector<Violation> ValidateNetlist(const Netlist& net) {
  std::vector<Violation> out;

  std::set<std::string> ids;
  for (const auto& b : net.blocks) {
    if (b.id == kExternalBlock) {
      out.push_back({Violation::Kind::kReservedId, b.id,
                     "block id 'ext' is reserved for chassis pins"});
    } else if (!ids.insert(b.id).second) {
      out.push_back({Violation::Kind::kDuplicateBlock, b.id,
                     "block id used more than once"});
    }
  }
  CheckPins(net, PortRef::Side::kIn, out);
  CheckPins(net, PortRef::Side::kOut, out);

  std::map<PortRef, int> sources;
  std::map<PortRef, int> sinks;
  for (const auto& c : net.connectors) {
    bool ok = true;
    for (const PortRef* p : {&c.from, &c.to}) {
      if (!PortExists(net, *p)) {
        out.push_back({Violation::Kind::kUnknownPort, p->ToString(),
                       "connector references a port that does not exist"});
        ok = false;
      }
    }
    if (!ok) continue;
    if (!c.from.is_source()) {
      out.push_back({Violation::Kind::kWrongDirection, c.from.ToString(),
                     "connector source is not an output"});
      continue;
    }
    if (c.to.is_source()) {
      out.push_back({Violation::Kind::kWrongDirection, c.to.ToString(),
                     "connector destination is not an input"});
      continue;
    }
    ++sources[c.from];
    ++sinks[c.to];
  }

  for (const auto& [port, count] : sources) {
    if (count > 1) {
      out.push_back({Violation::Kind::kFanOut, port.ToString(),
                     port.ToString() + " drives " + std::to_string(count) +
                         " connectors; route fan-out through a SPLITTER"});
    }
  }

  auto check_sink = [&](const PortRef& port) {
    auto it = sinks.find(port);
    const int count = it == sinks.end() ? 0 : it->second;
    if (count == 0) {
      out.push_back({Violation::Kind::kMissingDriver, port.ToString(),
                     port.ToString() + " is not driven"});
    } else if (count > 1) {
      out.push_back({Violation::Kind::kMultipleDrivers, port.ToString(),
                     port.ToString() + " is driven by " +
                         std::to_string(count) + " connectors"});
    }
  };
  for (const auto& b : net.blocks) {
    for (int i = 1; i <= InputArity(b.kind); ++i) {
      check_sink({b.id, PortRef::Side::kIn, i});
    }
  }
  for (const auto& name : net.outputs) {
    if (auto ref = PortRef::Parse(name); ref && ref->external()) {
      check_sink(*ref);
    }
  }

  FindCycles(net, out);
  return out;
}

namespace {
std::string Summarise(const std::vector<Violation>& violations) {
  std::string msg = "netlist has " + std::to_string(violations.size()) +
                    " violation(s)";
  for (const auto& v : violations) {
    msg += "\n  [" + std::string(ViolationKindName(v.kind)) + "] " +
           v.subject + ": " + v.message;
  }
  return msg;
}
}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::kValidation, Summarise(violations)),
      violations_(std::move(violations)) {}

void RequireValid(const Netlist& net) {
  auto violations = ValidateNetlist(net);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

BlockOrder RankBlocks(const Netlist& net) {
  const std::size_t n = net.blocks.size();
  std::vector<std::vector<std::size_t>> preds(n);
  for (const auto& c : net.connectors) {
    if (c.from.external() || c.to.external()) continue;
    auto a = net.FindBlock(c.from.block);
    auto b = net.FindBlock(c.to.block);
    if (a && b) preds[*b].push_back(*a);
  }
  BlockOrder result;
  result.rank.assign(n, -1);
  std::vector<bool> on_path(n, false);
  std::function<int(std::size_t)> depth = [&](std::size_t b) -> int {
    if (result.rank[b] >= 0) return result.rank[b];
    if (on_path[b]) {
      throw Error(ErrorCode::kValidation,
                  "cannot rank blocks of a cyclic netlist at " +
                      net.blocks[b].id);
    }
    on_path[b] = true;
    int r = 0;
    for (std::size_t p : preds[b]) r = std::max(r, depth(p) + 1);
    on_path[b] = false;
    return result.rank[b] = r;
  };
  for (std::size_t b = 0; b < n; ++b) depth(b);
  result.order.resize(n);
  std::iota(result.order.begin(), result.order.end(), std::size_t{0});
  std::stable_sort(result.order.begin(), result.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return result.rank[a] < result.rank[b];
                   });
  return result;
}

}  // namespace shia::logic

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

#include "shia/logic/simulator.h"

#include <algorithm>

namespace shia::logic {

Simulator::Simulator(Netlist net) : net_(std::move(net)) {
  RequireValid(net_);
  order_ = RankBlocks(net_);

  blocks_.reserve(net_.blocks.size());
  block_fanout_.resize(net_.blocks.size());
  for (std::size_t i = 0; i < net_.blocks.size(); ++i) {
    blocks_.push_back(BlockInstance::PowerOn(net_.blocks[i].id,
                                             net_.blocks[i].kind));
    block_fanout_[i].resize(
        static_cast<std::size_t>(OutputArity(net_.blocks[i].kind)));
  }
  input_fanout_.resize(kChassisPins);

  for (const auto& c : net_.connectors) {
    Destination dest;
    if (c.to.external()) {
      dest.external = true;
      dest.block = static_cast<std::size_t>(c.to.index - 1);
    } else {
      dest.block = *net_.FindBlock(c.to.block);
      dest.port = c.to.index;
    }
    if (c.from.external()) {
      input_fanout_[static_cast<std::size_t>(c.from.index - 1)].push_back(dest);
    } else {
      block_fanout_[*net_.FindBlock(c.from.block)]
                   [static_cast<std::size_t>(c.from.index - 1)]
                       .push_back(dest);
    }
  }
  event_cap_ = 10 * std::max<std::size_t>(net_.connectors.size(), 1);

  int max_rank = 0;
  for (int r : order_.rank) max_rank = std::max(max_rank, r);
  std::vector<std::vector<Delivery>> buckets(
      static_cast<std::size_t>(max_rank) + 1);
  Propagate(buckets, 0, /*evaluate_all=*/true);
}

void Simulator::Route(const Destination& dest, SignalLevel level,
                      std::vector<std::vector<Delivery>>& buckets) {
  if (dest.external) {
    outputs_.set(static_cast<int>(dest.block) + 1, level);
    return;
  }
  const auto rank = static_cast<std::size_t>(order_.rank[dest.block]);
  buckets[rank].push_back({dest.block, dest.port, level});
}

SettleResult Simulator::Settle(const InputVector& inputs) {
  std::size_t events = 0;
  std::vector<std::vector<Delivery>> buckets;
  int max_rank = 0;
  for (int r : order_.rank) max_rank = std::max(max_rank, r);
  buckets.resize(static_cast<std::size_t>(max_rank) + 1);

  for (int pin = 1; pin <= kChassisPins; ++pin) {
    if (inputs.at(pin) == inputs_.at(pin)) continue;
    inputs_.set(pin, inputs.at(pin));
    for (const auto& dest : input_fanout_[static_cast<std::size_t>(pin - 1)]) {
      ++events;
      Route(dest, inputs.at(pin), buckets);
    }
  }
  return Propagate(buckets, events, /*evaluate_all=*/false);
}

SettleResult Simulator::Propagate(std::vector<std::vector<Delivery>>& buckets,
                                  std::size_t events, bool evaluate_all) {
  std::size_t cursor = 0;
  for (std::size_t rank = 0; rank < buckets.size(); ++rank) {
    // Group this bucket's deliveries by block, keeping first-arrival order
    // between blocks and port order within a block.
    std::vector<std::size_t> touched;
    std::vector<std::vector<Delivery>> per_block(blocks_.size());
    for (const auto& d : buckets[rank]) {
      if (per_block[d.block].empty()) touched.push_back(d.block);
      per_block[d.block].push_back(d);
    }
    if (evaluate_all) {
      for (; cursor < order_.order.size() &&
             order_.rank[order_.order[cursor]] == static_cast<int>(rank);
           ++cursor) {
        const std::size_t b = order_.order[cursor];
        if (per_block[b].empty()) touched.push_back(b);
      }
    }
    for (std::size_t b : touched) {
      auto& pending = per_block[b];
      std::stable_sort(pending.begin(), pending.end(),
                       [](const Delivery& x, const Delivery& y) {
                         return x.port < y.port;
                       });
      for (const auto& d : pending) {
        LatchInput(blocks_[b], {d.port, d.level});
      }
      for (const auto& ev : Reevaluate(blocks_[b])) {
        for (const auto& dest :
             block_fanout_[b][static_cast<std::size_t>(ev.port - 1)]) {
          if (++events > event_cap_) {
            throw Error(ErrorCode::kNonQuiescent,
                        "settle exceeded " + std::to_string(event_cap_) +
                            " events without reaching quiescence");
          }
          Route(dest, ev.level, buckets);
        }
      }
    }
  }
  last_events_ = events;
  return Current();
}

SettleResult Simulator::Current() const {
  SettleResult result;
  result.outputs = outputs_;
  result.nodes = Snapshot();
  result.events = last_events_;
  return result;
}

NodeSnapshot Simulator::Snapshot() const {
  NodeSnapshot snap;
  for (int pin = 1; pin <= kChassisPins; ++pin) {
    snap.ports.emplace_back("ext.in" + std::to_string(pin), inputs_.at(pin));
  }
  for (int pin = 1; pin <= kChassisPins; ++pin) {
    snap.ports.emplace_back("ext.out" + std::to_string(pin), outputs_.at(pin));
  }
  for (const auto& b : blocks_) {
    for (std::size_t i = 0; i < b.input_state.size(); ++i) {
      snap.ports.emplace_back(b.id + ".in" + std::to_string(i + 1),
                              b.input_state[i]);
    }
    for (std::size_t i = 0; i < b.output_state.size(); ++i) {
      snap.ports.emplace_back(b.id + ".out" + std::to_string(i + 1),
                              b.output_state[i]);
    }
  }
  return snap;
}

SettleResult Settle(const Netlist& net, const InputVector& v) {
  Simulator sim(net);
  return sim.Settle(v);
}

}  // namespace shia::logic

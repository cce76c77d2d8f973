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

#ifndef SHIA_LOGIC_ORACLE_H_
#define SHIA_LOGIC_ORACLE_H_

#include "shia/logic/netlist.h"
#include "shia/logic/signal.h"

namespace shia::logic {

// Reference evaluator: walks the blocks in topological order computing each
// output as a plain Boolean expression of its drivers. Shares no code with
// the event-driven Simulator and serves as ground truth for it.
OutputVector OracleEval(const Netlist& net, const InputVector& v);

}  // namespace shia::logic

#endif  // SHIA_LOGIC_ORACLE_H_

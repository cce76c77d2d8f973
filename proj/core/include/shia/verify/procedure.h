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

#ifndef SHIA_VERIFY_PROCEDURE_H_
#define SHIA_VERIFY_PROCEDURE_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shia/board/board.h"
#include "shia/board/board_server.h"
#include "shia/logic/netlist.h"
#include "shia/model/model_server.h"
#include "shia/transport/transcript.h"
#include "shia/verify/karnaugh.h"
#include "shia/verify/report.h"
#include "shia/verify/sweep.h"

namespace shia::verify {

struct ProcedureOptions {
  logic::Netlist netlist;
  model::ModelConfig model;
  double poll_hz = 10.0;
  // One-way loopback latency.
  Millis latency{0};
  // Injected into the emulated board. Loopback only.
  std::vector<board::FaultSpec> faults;
  bool virtual_time = true;
  // "host:port" of a remote board; empty selects an in-process board on a
  // loopback link.
  std::string stream_address;
  // Records every byte on the loopback link when set.
  std::shared_ptr<transport::Transcript> transcript;
};

struct ProcedureResult {
  TruthTable mom;
  MrmSweepResult mrm;
  // Absent when the MRM table has failed rows.
  std::optional<Comparison> comparison;
  std::vector<model::ModelLogEntry> model_log;
  std::vector<board::BoardLogEntry> board_log;
  // Clock time consumed by the MRM sweep.
  Millis elapsed{0};

  bool green() const { return comparison && comparison->is_zero; }
  std::string verdict() const;
  ReportBundle Bundle(const ProcedureOptions& options) const;
};

// The integrated verification procedure: a MOM sweep of the model, an MRM
// sweep against the board, and the map comparison of the two. Throws
// kConnectionRefused for an unreachable board and kClockMode when virtual
// time is requested with a remote board.
ProcedureResult RunProcedure(const ProcedureOptions& options);

}  // namespace shia::verify

#endif  // SHIA_VERIFY_PROCEDURE_H_

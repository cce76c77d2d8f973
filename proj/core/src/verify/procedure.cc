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

#include "shia/verify/procedure.h"

#include "shia/error.h"
#include "shia/transport/loopback.h"
#include "shia/transport/stream.h"

namespace shia::verify {

std::string ProcedureResult::verdict() const {
  if (!comparison) return "INCOMPLETE";
  return comparison->is_zero ? "ZERO-DISCREPANCY" : "DISCREPANCY";
}

ReportBundle ProcedureResult::Bundle(const ProcedureOptions& options) const {
  ReportBundle bundle;
  bundle.info.netlist_id = options.netlist.name;
  bundle.info.delay_ms = options.model.delay.count();
  bundle.info.poll_hz = options.poll_hz;
  bundle.info.clock_mode = options.virtual_time ? "virtual" : "real";
  bundle.info.transport =
      options.stream_address.empty() ? "loopback" : options.stream_address;
  bundle.info.latency_ms = options.latency.count();
  for (const auto& f : options.faults) bundle.info.faults.push_back(f.ToString());
  bundle.tables = {mom, mrm.table};
  bundle.comparison = comparison;
  bundle.observations = mrm.observations;
  return bundle;
}

ProcedureResult RunProcedure(const ProcedureOptions& options) {
  if (options.poll_hz <= 0) {
    throw Error(ErrorCode::kConfig, "poll rate must be positive");
  }
  const bool remote = !options.stream_address.empty();
  if (remote && options.virtual_time) {
    throw Error(ErrorCode::kClockMode,
                "virtual time needs an in-process board; use the loopback "
                "transport or a real clock");
  }
  if (remote && !options.faults.empty()) {
    throw Error(ErrorCode::kConfig,
                "faults are injected on the board; pass them to `shia board`");
  }

  std::unique_ptr<transport::Clock> clock;
  if (options.virtual_time) {
    clock = std::make_unique<transport::VirtualClock>();
  } else {
    clock = std::make_unique<transport::RealClock>();
  }

  ProcedureResult result;
  result.mom = MomSweep(options.netlist);

  model::ModelServer server(options.netlist, *clock, options.model);
  std::unique_ptr<board::BoardServer> board_server;
  Millis poll_period{0};
  if (remote) {
    server.AttachEndpoint(
        transport::ConnectStream(options.stream_address, options.model.serial));
    poll_period = Millis{static_cast<long long>(1000.0 / options.poll_hz + 0.5)};
  } else {
    transport::LoopbackOptions link;
    link.config = options.model.serial;
    link.latency = options.latency;
    link.transcript = options.transcript;
    link.first_name = "model";
    link.second_name = "board";
    auto [model_end, board_end] = transport::OpenLoopback(*clock, link);
    board::Board board(options.netlist);
    for (const auto& fault : options.faults) board.InjectFault(fault);
    board::BoardServerOptions board_options;
    board_options.poll_hz = options.poll_hz;
    board_server = std::make_unique<board::BoardServer>(
        std::move(board_end), std::move(board), *clock, board_options);
    server.AttachEndpoint(std::move(model_end));
    board_server->Start();
    poll_period = board_server->poll_period();
  }

  MrmSession session{server, *clock, poll_period, options.latency, Millis{50},
                     nullptr};
  if (board_server) {
    session.board_inputs = [&board_server]() -> std::optional<InputVector> {
      return board_server->board().inputs();
    };
  }
  const Millis start = clock->now();
  result.mrm = MrmSweep(session);
  result.elapsed = clock->now() - start;
  if (result.mrm.table.complete()) {
    result.comparison = Compare(result.mom, result.mrm.table);
  }
  result.model_log = server.log();
  if (board_server) {
    board_server->Stop();
    result.board_log = board_server->log();
  }
  return result;
}

}  // namespace shia::verify

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

#ifndef SHIA_BOARD_BOARD_SERVER_H_
#define SHIA_BOARD_BOARD_SERVER_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "shia/board/board.h"
#include "shia/transport/clock.h"
#include "shia/transport/endpoint.h"

namespace shia::board {

using transport::Millis;

struct BoardServerOptions {
  double poll_hz = 10.0;
  // Send every output level once when the session starts.
  bool report_on_start = true;
  // Receives each log line as it is produced (e.g. stdout for `shia board`).
  std::function<void(const std::string&)> log_sink;
};

struct BoardLogEntry {
  enum class Kind { kRx, kTx, kError, kInfo };

  Millis at{0};
  Kind kind = Kind::kInfo;
  std::string line;
  int gpio = 0;  // kRx: the GPIO the command drove
};

// Board-side server. Every 1/poll_hz of clock time it drains the endpoint,
// applies each command frame and writes the resulting response frames at
// once. Runs on the clock's timers; all public calls are thread-safe.
class BoardServer {
 public:
  BoardServer(transport::Endpoint endpoint, Board board, transport::Clock& clock,
              BoardServerOptions options = {});
  ~BoardServer();
  BoardServer(const BoardServer&) = delete;
  BoardServer& operator=(const BoardServer&) = delete;

  // Sends the start-of-session report (if enabled) and begins polling with
  // the first tick at the current clock time.
  void Start();
  // Stops polling. Idempotent.
  void Stop();
  bool running() const;
  // Blocks until the loop has exited (endpoint closed or Stop()).
  void Wait();

  // Faults take effect immediately; changed outputs are reported.
  void InjectFault(const FaultSpec& fault);
  // Writes the level of every output pin, pins 1..5.
  void SendFullStateReport();

  Board board() const;
  std::vector<BoardLogEntry> log() const;
  Millis poll_period() const;

 private:
  class Core;
  std::shared_ptr<Core> core_;
};

// Runs a board server on `endpoint` until the peer closes it. Blocking, so
// only meaningful with a real clock.
void Serve(transport::Endpoint endpoint, Board board, transport::Clock& clock,
           BoardServerOptions options = {});

}  // namespace shia::board

#endif  // SHIA_BOARD_BOARD_SERVER_H_

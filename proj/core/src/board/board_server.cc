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

#include "shia/board/board_server.h"

#include <cmath>
#include <condition_variable>
#include <mutex>
#include <optional>

#include "shia/error.h"

namespace shia::board {

class BoardServer::Core : public std::enable_shared_from_this<Core> {
 public:
  Core(transport::Endpoint endpoint, Board board, transport::Clock& clock,
       BoardServerOptions options)
      : endpoint_(std::move(endpoint)),
        reader_(endpoint_.rx),
        board_(std::move(board)),
        clock_(clock),
        options_(std::move(options)) {
    if (!(options_.poll_hz > 0.0)) {
      throw Error(ErrorCode::kConfig, "poll_hz must be > 0");
    }
    period_ = Millis(std::max<long long>(
        1, std::llround(1000.0 / options_.poll_hz)));
  }

  void Start() {
    std::lock_guard lock(mu_);
    if (running_ || finished_) return;
    running_ = true;
    Log(BoardLogEntry::Kind::kInfo,
        "board server started, polling every " +
            std::to_string(period_.count()) + " ms");
    if (options_.report_on_start) Send(board_.FullStateReport());
    next_tick_ = clock_.now();
    ScheduleTick();
  }

  void Stop() {
    std::lock_guard lock(mu_);
    Finish("board server stopped");
  }

  bool running() const {
    std::lock_guard lock(mu_);
    return running_;
  }

  void Wait() {
    std::unique_lock lock(mu_);
    done_cv_.wait(lock, [&] { return finished_; });
  }

  void InjectFault(const FaultSpec& fault) {
    std::lock_guard lock(mu_);
    auto changed = board_.InjectFault(fault);
    Log(BoardLogEntry::Kind::kInfo, "fault injected: " + fault.ToString());
    if (running_) Send(changed);
  }

  void SendFullStateReport() {
    std::lock_guard lock(mu_);
    Send(board_.FullStateReport());
  }

  Board board() const {
    std::lock_guard lock(mu_);
    return board_;
  }

  std::vector<BoardLogEntry> log() const {
    std::lock_guard lock(mu_);
    return log_;
  }

  Millis period() const { return period_; }

 private:
  void ScheduleTick() {
    timer_ = clock_.ScheduleAt(next_tick_, [weak = weak_from_this()] {
      if (auto self = weak.lock()) self->Tick();
    });
  }

  void Tick() {
    std::lock_guard lock(mu_);
    if (!running_) return;
    transport::FrameReader::Result result;
    try {
      result = reader_.Read();
    } catch (const Error& e) {
      Log(BoardLogEntry::Kind::kError, e.what());
      Finish("endpoint closed mid-frame");
      return;
    }
    for (const auto& frame : result.frames) {
      protocol::PinMessage msg;
      try {
        msg = protocol::DecodeAs(frame.view(), protocol::Direction::kCommand);
      } catch (const Error& e) {
        Log(BoardLogEntry::Kind::kError,
            "RX " + frame.str() + " -> protocol-error: " + e.what());
        continue;
      }
      CommandOutcome outcome = board_.ApplyCommand(msg);
      Log(outcome.rejected ? BoardLogEntry::Kind::kError : BoardLogEntry::Kind::kRx,
          outcome.log_line,
          outcome.rejected ? 0 : board_.map().InputGpio(msg.pin));
      // Output changes are reported as they happen rather than on the next
      // poll.
      Send(outcome.responses);
    }
    if (result.closed) {
      Finish("endpoint closed");
      return;
    }
    next_tick_ += period_;
    ScheduleTick();
  }

  void Send(const std::vector<protocol::PinMessage>& responses) {
    for (const auto& msg : responses) {
      const protocol::Frame frame = protocol::Encode(msg);
      try {
        endpoint_.tx->Write(frame.view());
      } catch (const Error& e) {
        Log(BoardLogEntry::Kind::kError, "TX " + frame.str() + " failed: " + e.what());
        continue;
      }
      Log(BoardLogEntry::Kind::kTx, "TX " + frame.str());
    }
  }

  void Finish(const std::string& why) {
    if (finished_) return;
    if (timer_) clock_.Cancel(*timer_);
    timer_.reset();
    running_ = false;
    finished_ = true;
    Log(BoardLogEntry::Kind::kInfo, why);
    done_cv_.notify_all();
  }

  void Log(BoardLogEntry::Kind kind, std::string line, int gpio = 0) {
    if (options_.log_sink) options_.log_sink(line);
    log_.push_back({clock_.now(), kind, std::move(line), gpio});
  }

  mutable std::mutex mu_;
  std::condition_variable done_cv_;
  transport::Endpoint endpoint_;
  transport::FrameReader reader_;
  Board board_;
  transport::Clock& clock_;
  BoardServerOptions options_;
  Millis period_{100};
  Millis next_tick_{0};
  std::optional<transport::Clock::TimerId> timer_;
  bool running_ = false;
  bool finished_ = false;
  std::vector<BoardLogEntry> log_;
};

BoardServer::BoardServer(transport::Endpoint endpoint, Board board,
                         transport::Clock& clock, BoardServerOptions options)
    : core_(std::make_shared<Core>(std::move(endpoint), std::move(board), clock,
                                   std::move(options))) {}

BoardServer::~BoardServer() { core_->Stop(); }

void BoardServer::Start() { core_->Start(); }
void BoardServer::Stop() { core_->Stop(); }
bool BoardServer::running() const { return core_->running(); }
void BoardServer::Wait() { core_->Wait(); }
void BoardServer::InjectFault(const FaultSpec& fault) { core_->InjectFault(fault); }
void BoardServer::SendFullStateReport() { core_->SendFullStateReport(); }
Board BoardServer::board() const { return core_->board(); }
std::vector<BoardLogEntry> BoardServer::log() const { return core_->log(); }
Millis BoardServer::poll_period() const { return core_->period(); }

void Serve(transport::Endpoint endpoint, Board board, transport::Clock& clock,
           BoardServerOptions options) {
  BoardServer server(std::move(endpoint), std::move(board), clock,
                     std::move(options));
  server.Start();
  server.Wait();
}

}  // namespace shia::board

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

#include "shia/transport/loopback.h"

#include <mutex>

#include "shia/error.h"

namespace shia::transport {
namespace {

struct Pipe {
  std::mutex mu;
  std::string buffer;
  bool close_requested = false;  // writer called Close()
  bool close_delivered = false;  // the close has reached the reader
  bool reader_closed = false;
};

class LoopbackSink final : public ByteSink {
 public:
  LoopbackSink(Clock& clock, std::shared_ptr<Pipe> pipe, Millis latency,
               std::shared_ptr<Transcript> transcript, std::string channel)
      : clock_(clock),
        pipe_(std::move(pipe)),
        latency_(latency),
        transcript_(std::move(transcript)),
        channel_(std::move(channel)) {}

  void Write(std::string_view bytes) override {
    {
      std::lock_guard lock(pipe_->mu);
      if (pipe_->close_requested || pipe_->reader_closed) {
        throw Error(ErrorCode::kStreamClosed,
                    "write on closed loopback " + channel_);
      }
    }
    Record(TranscriptEntry::Kind::kWrite, std::string(bytes));
    Deliver([pipe = pipe_, data = std::string(bytes)] {
      pipe->buffer += data;
    }, TranscriptEntry::Kind::kDeliver, std::string(bytes));
  }

  void Close() override {
    {
      std::lock_guard lock(pipe_->mu);
      if (pipe_->close_requested) return;
      pipe_->close_requested = true;
    }
    Record(TranscriptEntry::Kind::kClose, "");
    Deliver([pipe = pipe_] { pipe->close_delivered = true; },
            TranscriptEntry::Kind::kClose, "");
  }

  bool closed() const override {
    std::lock_guard lock(pipe_->mu);
    return pipe_->close_requested || pipe_->reader_closed;
  }

 private:
  void Record(TranscriptEntry::Kind kind, std::string bytes) {
    if (transcript_) {
      transcript_->Record({clock_.now(), kind, channel_, std::move(bytes)});
    }
  }

  // Applies `mutate` to the pipe once the latency has elapsed.
  template <typename F>
  void Deliver(F mutate, TranscriptEntry::Kind kind, std::string bytes) {
    auto apply = [clock = &clock_, pipe = pipe_, transcript = transcript_,
                  channel = channel_, mutate, kind, bytes]() mutable {
      {
        std::lock_guard lock(pipe->mu);
        mutate();
      }
      if (transcript && kind != TranscriptEntry::Kind::kClose) {
        transcript->Record({clock->now(), kind, channel, std::move(bytes)});
      }
    };
    if (latency_ == Millis{0}) {
      apply();
    } else {
      clock_.ScheduleAfter(latency_, std::move(apply));
    }
  }

  Clock& clock_;
  std::shared_ptr<Pipe> pipe_;
  Millis latency_;
  std::shared_ptr<Transcript> transcript_;
  std::string channel_;
};

class LoopbackSource final : public ByteSource {
 public:
  explicit LoopbackSource(std::shared_ptr<Pipe> pipe) : pipe_(std::move(pipe)) {}

  ReadResult ReadAvailable() override {
    std::lock_guard lock(pipe_->mu);
    ReadResult result;
    result.bytes.swap(pipe_->buffer);
    result.closed = pipe_->close_delivered || pipe_->reader_closed;
    return result;
  }

  void Close() override {
    std::lock_guard lock(pipe_->mu);
    pipe_->reader_closed = true;
    pipe_->buffer.clear();
  }

 private:
  std::shared_ptr<Pipe> pipe_;
};

}  // namespace

std::pair<Endpoint, Endpoint> OpenLoopback(Clock& clock,
                                           const LoopbackOptions& options) {
  if (options.latency < Millis{0}) {
    throw Error(ErrorCode::kConfig, "loopback latency must be >= 0");
  }
  auto forward = std::make_shared<Pipe>();   // first -> second
  auto backward = std::make_shared<Pipe>();  // second -> first
  const std::string fwd = options.first_name + "->" + options.second_name;
  const std::string bwd = options.second_name + "->" + options.first_name;

  Endpoint first;
  first.tx = std::make_shared<LoopbackSink>(clock, forward, options.latency,
                                            options.transcript, fwd);
  first.rx = std::make_shared<LoopbackSource>(backward);
  first.config = options.config;
  first.latency = options.latency;
  first.description = "loopback:" + options.first_name;

  Endpoint second;
  second.tx = std::make_shared<LoopbackSink>(clock, backward, options.latency,
                                             options.transcript, bwd);
  second.rx = std::make_shared<LoopbackSource>(forward);
  second.config = options.second_config.value_or(options.config);
  second.latency = options.latency;
  second.description = "loopback:" + options.second_name;

  first.peer_config = second.config;
  second.peer_config = first.config;
  return {std::move(first), std::move(second)};
}

}  // namespace shia::transport

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

#ifndef SHIA_TRANSPORT_ENDPOINT_H_
#define SHIA_TRANSPORT_ENDPOINT_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shia/protocol/framing.h"
#include "shia/protocol/serial_config.h"
#include "shia/transport/clock.h"

namespace shia::transport {

using protocol::SerialConfig;

class ByteSink {
 public:
  virtual ~ByteSink() = default;
  // Throws kStreamClosed once either side has closed.
  virtual void Write(std::string_view bytes) = 0;
  virtual void Close() = 0;
  virtual bool closed() const = 0;
};

struct ReadResult {
  std::string bytes;
  // The peer has closed and `bytes` is everything that will ever arrive.
  bool closed = false;
};

class ByteSource {
 public:
  virtual ~ByteSource() = default;
  // Non-blocking: everything delivered so far.
  virtual ReadResult ReadAvailable() = 0;
  virtual void Close() = 0;
};

// One end of a duplex byte stream. The sink and source halves are usable
// independently so transmit and receive can run in separate regions.
struct Endpoint {
  std::shared_ptr<ByteSink> tx;
  std::shared_ptr<ByteSource> rx;
  SerialConfig config;
  // Set by transports that can see both ends; checked at session start.
  std::optional<SerialConfig> peer_config;
  Millis latency{0};
  std::string description;

  void Close() const {
    if (tx) tx->Close();
    if (rx) rx->Close();
  }
};

// Reassembles frames from a ByteSource. A close in the middle of a frame
// surfaces as kTruncatedFrame.
class FrameReader {
 public:
  explicit FrameReader(std::shared_ptr<ByteSource> source)
      : source_(std::move(source)) {}

  struct Result {
    std::vector<protocol::Frame> frames;
    bool closed = false;
  };
  Result Read();

 private:
  std::shared_ptr<ByteSource> source_;
  protocol::FrameAssembler assembler_;
};

}  // namespace shia::transport

#endif  // SHIA_TRANSPORT_ENDPOINT_H_

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

#ifndef SHIA_TRANSPORT_STREAM_H_
#define SHIA_TRANSPORT_STREAM_H_

#include <cstdint>
#include <memory>
#include <string>

#include "shia/transport/endpoint.h"

namespace shia::transport {

struct StreamAddress {
  std::string host;
  std::uint16_t port = 0;

  // "host:port"; an empty host (":9000") means loopback for connect and any
  // interface for listen. Throws kConfig on malformed input.
  static StreamAddress Parse(const std::string& text);
  std::string ToString() const { return host + ":" + std::to_string(port); }
};

// TCP client end. Throws kConnectionRefused when nothing is listening.
Endpoint ConnectStream(const std::string& address,
                       const SerialConfig& config = {});

// Bound TCP listener. Throws kBindFailure if the address is taken.
class StreamListener {
 public:
  explicit StreamListener(const std::string& address,
                          const SerialConfig& config = {});
  ~StreamListener();
  StreamListener(const StreamListener&) = delete;
  StreamListener& operator=(const StreamListener&) = delete;

  // Blocks until a client connects. Throws kStreamClosed after Close().
  Endpoint Accept();
  void Close();

  std::uint16_t port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Binds `address` and waits for a single client.
Endpoint ListenStream(const std::string& address,
                      const SerialConfig& config = {});

}  // namespace shia::transport

#endif  // SHIA_TRANSPORT_STREAM_H_

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

#ifndef SHIA_PROTOCOL_FRAMING_H_
#define SHIA_PROTOCOL_FRAMING_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shia/protocol/pin_message.h"

namespace shia::protocol {

// Splits a byte stream into consecutive fixed-size frames. A trailing odd
// byte is held until its partner arrives. Owned by exactly one reader.
class FrameAssembler {
 public:
  std::vector<Frame> Push(std::string_view bytes);

  // Called when the stream closes. Throws kTruncatedFrame if half a frame is
  // still buffered.
  void Finish() const;

  bool has_partial() const { return pending_.has_value(); }

 private:
  std::optional<char> pending_;
};

// Convenience for whole buffers: frames of `bytes`, treating the end of the
// buffer as end of stream.
std::vector<Frame> FrameStream(std::string_view bytes);

}  // namespace shia::protocol

#endif  // SHIA_PROTOCOL_FRAMING_H_

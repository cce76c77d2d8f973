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

#include "shia/protocol/framing.h"

namespace shia::protocol {

std::vector<Frame> FrameAssembler::Push(std::string_view bytes) {
  std::vector<Frame> frames;
  frames.reserve((bytes.size() + 1) / kFrameSize);
  for (char c : bytes) {
    if (pending_) {
      frames.emplace_back(*pending_, c);
      pending_.reset();
    } else {
      pending_ = c;
    }
  }
  return frames;
}

void FrameAssembler::Finish() const {
  if (pending_) {
    throw Error(ErrorCode::kTruncatedFrame,
                "stream closed with half a frame buffered");
  }
}

std::vector<Frame> FrameStream(std::string_view bytes) {
  FrameAssembler assembler;
  auto frames = assembler.Push(bytes);
  assembler.Finish();
  return frames;
}

}  // namespace shia::protocol

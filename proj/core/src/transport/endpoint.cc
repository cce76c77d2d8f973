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

#include "shia/transport/endpoint.h"

namespace shia::transport {

FrameReader::Result FrameReader::Read() {
  ReadResult raw = source_->ReadAvailable();
  Result result;
  result.frames = assembler_.Push(raw.bytes);
  result.closed = raw.closed;
  if (raw.closed) assembler_.Finish();
  return result;
}

}  // namespace shia::transport

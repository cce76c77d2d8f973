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

#ifndef SHIA_TRANSPORT_TRANSCRIPT_H_
#define SHIA_TRANSPORT_TRANSCRIPT_H_

#include <mutex>
#include <string>
#include <vector>

#include "shia/transport/clock.h"

namespace shia::transport {

struct TranscriptEntry {
  enum class Kind { kWrite, kDeliver, kClose };

  Millis at{0};
  Kind kind = Kind::kWrite;
  std::string channel;
  std::string bytes;

  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

// Timestamped record of every byte written to and delivered by a link.
class Transcript {
 public:
  void Record(TranscriptEntry entry);
  std::vector<TranscriptEntry> entries() const;

  // One line per entry: "<ms> <write|deliver|close> <channel> <bytes>".
  std::string Render() const;

 private:
  mutable std::mutex mu_;
  std::vector<TranscriptEntry> entries_;
};

}  // namespace shia::transport

#endif  // SHIA_TRANSPORT_TRANSCRIPT_H_

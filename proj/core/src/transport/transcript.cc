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

#include "shia/transport/transcript.h"

#include <sstream>

namespace shia::transport {

void Transcript::Record(TranscriptEntry entry) {
  std::lock_guard lock(mu_);
  entries_.push_back(std::move(entry));
}

std::vector<TranscriptEntry> Transcript::entries() const {
  std::lock_guard lock(mu_);
  return entries_;
}

std::string Transcript::Render() const {
  std::ostringstream out;
  for (const auto& e : entries()) {
    const char* kind = e.kind == TranscriptEntry::Kind::kWrite     ? "write"
                       : e.kind == TranscriptEntry::Kind::kDeliver ? "deliver"
                                                                   : "close";
    out << e.at.count() << ' ' << kind << ' ' << e.channel << ' ' << e.bytes
        << '\n';
  }
  return out.str();
}

}  // namespace shia::transport

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

#include "shia/error.h"

namespace shia {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArity: return "invalid-arity";
    case ErrorCode::kUnknownPort: return "unknown-port";
    case ErrorCode::kNonQuiescent: return "non-quiescent";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kInvalidPin: return "invalid-pin";
    case ErrorCode::kInvalidLevel: return "invalid-level";
    case ErrorCode::kMalformedFrame: return "malformed-frame";
    case ErrorCode::kTruncatedFrame: return "truncated-frame";
    case ErrorCode::kStreamClosed: return "stream-closed";
    case ErrorCode::kConnectionRefused: return "connection-refused";
    case ErrorCode::kBindFailure: return "bind-failure";
    case ErrorCode::kClockMode: return "clock-mode";
    case ErrorCode::kDuplicateFault: return "duplicate-fault";
    case ErrorCode::kInvalidFault: return "invalid-fault";
    case ErrorCode::kIncompleteTable: return "incomplete-table";
    case ErrorCode::kPinMismatch: return "pin-mismatch";
    case ErrorCode::kIo: return "io-error";
    case ErrorCode::kConfig: return "config-error";
  }
  return "unknown";
}

}  // namespace shia

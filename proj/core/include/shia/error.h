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

#ifndef SHIA_ERROR_H_
#define SHIA_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace shia {

enum class ErrorCode {
  kInvalidArity,
  kUnknownPort,
  kNonQuiescent,
  kParse,
  kValidation,
  kInvalidPin,
  kInvalidLevel,
  kMalformedFrame,
  kTruncatedFrame,
  kStreamClosed,
  kConnectionRefused,
  kBindFailure,
  kClockMode,
  kDuplicateFault,
  kInvalidFault,
  kIncompleteTable,
  kPinMismatch,
  kIo,
  kConfig,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shia

#endif  // SHIA_ERROR_H_

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

#ifndef SHIA_TRANSPORT_SERIAL_PORT_H_
#define SHIA_TRANSPORT_SERIAL_PORT_H_

#include <string>

#include "shia/transport/endpoint.h"

namespace shia::transport {

// Hook for a physical serial line (e.g. a USB-serial adapter to a board).
// No implementation ships here; everything in-tree runs over loopback or
// TCP endpoints.
class SerialPortAdapter {
 public:
  virtual ~SerialPortAdapter() = default;
  virtual Endpoint Open(const std::string& device,
                        const SerialConfig& config) = 0;
};

}  // namespace shia::transport

#endif  // SHIA_TRANSPORT_SERIAL_PORT_H_

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

#ifndef SHIA_LOGIC_NETLIST_IO_H_
#define SHIA_LOGIC_NETLIST_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "shia/logic/netlist.h"

namespace shia::logic {

// Parses a netlist document (JSON with sections "blocks", "connectors",
// "inputs", "outputs"; see docs/formats.md) and validates it.
// Throws Error(kParse) with line or field context on malformed documents and
// ValidationError when the parsed netlist breaks a structural rule.
Netlist LoadNetlist(std::string_view document);
Netlist LoadNetlistFile(const std::filesystem::path& path);

// Parses without validating. Used by `shia validate` to list every violation.
Netlist ParseNetlist(std::string_view document);

std::string EmitNetlist(const Netlist& net);

// The shipped five-in/five-out chassis (data/reference_chassis.json).
std::string_view ReferenceNetlistDocument();
const Netlist& ReferenceNetlist();

}  // namespace shia::logic

#endif  // SHIA_LOGIC_NETLIST_IO_H_

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

#include "shia/logic/netlist_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "reference_netlist_data.h"

namespace shia::logic {
namespace {

using nlohmann::json;

[[noreturn]] void FieldError(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParse, "netlist field " + field + ": " + what);
}

const json& Section(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) FieldError(name, "missing section");
  if (!it->is_array()) FieldError(name, "expected an array");
  return *it;
}

std::string StringField(const json& obj, const std::string& path,
                        const char* key) {
  if (!obj.is_object()) FieldError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) FieldError(path + "." + key, "missing");
  if (!it->is_string()) FieldError(path + "." + key, "expected a string");
  return it->get<std::string>();
}

PortRef PortField(const json& obj, const std::string& path, const char* key) {
  const std::string text = StringField(obj, path, key);
  auto ref = PortRef::Parse(text);
  if (!ref) {
    FieldError(path + "." + key,
               "'" + text + "' is not a port name (<block>.<inN|outN>)");
  }
  return *ref;
}

}  // namespace

Netlist ParseNetlist(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, document.size());
    const auto line =
        1 + std::count(document.begin(), document.begin() + upto, '\n');
    throw Error(ErrorCode::kParse, "netlist parse error at line " +
                                       std::to_string(line) + ": " + e.what());
  }
  if (!doc.is_object()) FieldError("<root>", "expected an object");

  Netlist net;
  if (auto it = doc.find("name"); it != doc.end() && it->is_string()) {
    net.name = it->get<std::string>();
  }
  if (auto it = doc.find("description"); it != doc.end() && it->is_string()) {
    net.description = it->get<std::string>();
  }

  const json& blocks = Section(doc, "blocks");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const std::string path = "blocks[" + std::to_string(i) + "]";
    BlockSpec b;
    b.id = StringField(blocks[i], path, "id");
    const std::string kind = StringField(blocks[i], path, "kind");
    auto parsed = ParseGateKind(kind);
    if (!parsed) FieldError(path + ".kind", "unknown gate kind '" + kind + "'");
    b.kind = *parsed;
    net.blocks.push_back(std::move(b));
  }

  const json& connectors = Section(doc, "connectors");
  for (std::size_t i = 0; i < connectors.size(); ++i) {
    const std::string path = "connectors[" + std::to_string(i) + "]";
    net.connectors.push_back({PortField(connectors[i], path, "from"),
                              PortField(connectors[i], path, "to")});
  }

  for (const char* section : {"inputs", "outputs"}) {
    const json& pins = Section(doc, section);
    auto& dest = std::string_view(section) == "inputs" ? net.inputs : net.outputs;
    for (std::size_t i = 0; i < pins.size(); ++i) {
      if (!pins[i].is_string()) {
        FieldError(std::string(section) + "[" + std::to_string(i) + "]",
                   "expected a pin name string");
      }
      dest.push_back(pins[i].get<std::string>());
    }
  }
  return net;
}

Netlist LoadNetlist(std::string_view document) {
  Netlist net = ParseNetlist(document);
  RequireValid(net);
  return net;
}

Netlist LoadNetlistFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open netlist " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadNetlist(buf.str());
}

std::string EmitNetlist(const Netlist& net) {
  json doc = json::object();
  doc["name"] = net.name;
  if (!net.description.empty()) doc["description"] = net.description;
  doc["blocks"] = json::array();
  for (const auto& b : net.blocks) {
    doc["blocks"].push_back({{"id", b.id}, {"kind", GateKindName(b.kind)}});
  }
  doc["connectors"] = json::array();
  for (const auto& c : net.connectors) {
    doc["connectors"].push_back(
        {{"from", c.from.ToString()}, {"to", c.to.ToString()}});
  }
  doc["inputs"] = net.inputs;
  doc["outputs"] = net.outputs;
  return doc.dump(2) + "\n";
}

std::string_view ReferenceNetlistDocument() {
  return detail::kReferenceNetlistJson;
}

const Netlist& ReferenceNetlist() {
  static const Netlist net = LoadNetlist(ReferenceNetlistDocument());
  return net;
}

}  // namespace shia::logic

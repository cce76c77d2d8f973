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

#include "shia/verify/truth_table.h"

#include <sstream>
#include <vector>

#include "shia/error.h"
#include "shia/logic/oracle.h"

namespace shia::verify {

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kMom: return "MOM";
    case Provenance::kMrm: return "MRM";
    case Provenance::kOracle: return "oracle";
  }
  return "?";
}

TruthTable::TruthTable() {
  for (int i = 0; i < logic::kVectorCount; ++i) {
    rows[static_cast<std::size_t>(i)].inputs = InputVector::FromIndex(i);
  }
}

bool TruthTable::complete() const { return failed_rows() == 0; }

std::size_t TruthTable::failed_rows() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.failed ? 1 : 0;
  return n;
}

std::string TruthTable::ToCsv() const {
  std::ostringstream out;
  out << "in1,in2,in3,in4,in5,out1,out2,out3,out4,out5\n";
  for (const auto& r : rows) {
    for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
      out << logic::ToBit(r.inputs.at(pin)) << ',';
    }
    for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
      out << logic::ToBit(r.outputs.at(pin))
          << (pin == logic::kChassisPins ? '\n' : ',');
    }
  }
  return out.str();
}

TruthTable TruthTable::FromCsv(std::string_view csv, Provenance provenance,
                               std::string netlist_id) {
  std::istringstream in{std::string(csv)};
  std::string line;
  if (!std::getline(in, line) ||
      line != "in1,in2,in3,in4,in5,out1,out2,out3,out4,out5") {
    throw Error(ErrorCode::kParse, "truth table: bad or missing header");
  }
  TruthTable table;
  table.provenance = provenance;
  table.netlist_id = std::move(netlist_id);
  for (int i = 0; i < logic::kVectorCount; ++i) {
    if (!std::getline(in, line)) {
      throw Error(ErrorCode::kParse, "truth table: expected 32 rows, got " +
                                         std::to_string(i));
    }
    std::vector<int> bits;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      if (cell != "0" && cell != "1") {
        throw Error(ErrorCode::kParse, "truth table row " + std::to_string(i + 1) +
                                           ": cell '" + cell + "' is not 0/1");
      }
      bits.push_back(cell == "1");
    }
    if (bits.size() != 10) {
      throw Error(ErrorCode::kParse, "truth table row " + std::to_string(i + 1) +
                                         ": expected 10 cells");
    }
    auto& row = table.rows[static_cast<std::size_t>(i)];
    InputVector v;
    for (int pin = 1; pin <= 5; ++pin) {
      v.set(pin, logic::FromBool(bits[static_cast<std::size_t>(pin - 1)]));
      row.outputs.set(pin, logic::FromBool(bits[static_cast<std::size_t>(pin + 4)]));
    }
    if (v != row.inputs) {
      throw Error(ErrorCode::kParse, "truth table row " + std::to_string(i + 1) +
                                         " is out of ascending order");
    }
  }
  return table;
}

TruthTable OracleTable(const logic::Netlist& net) {
  TruthTable table;
  table.provenance = Provenance::kOracle;
  table.netlist_id = net.name;
  for (auto& row : table.rows) row.outputs = logic::OracleEval(net, row.inputs);
  return table;
}

}  // namespace shia::verify

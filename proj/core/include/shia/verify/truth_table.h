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

#ifndef SHIA_VERIFY_TRUTH_TABLE_H_
#define SHIA_VERIFY_TRUTH_TABLE_H_

#include <array>
#include <string>
#include <string_view>

#include "shia/logic/netlist.h"
#include "shia/logic/signal.h"

namespace shia::verify {

using logic::InputVector;
using logic::OutputVector;

enum class Provenance { kMom, kMrm, kOracle };
std::string_view ProvenanceName(Provenance p);

struct TruthRow {
  InputVector inputs;
  OutputVector outputs;
  // MRM only: no trustworthy reading was obtained for this row.
  bool failed = false;
  std::string note;

  friend bool operator==(const TruthRow&, const TruthRow&) = default;
};

// All 32 input combinations in ascending binary order (pin 1 is the most
// significant bit) with the observed outputs.
struct TruthTable {
  std::array<TruthRow, logic::kVectorCount> rows;
  Provenance provenance = Provenance::kOracle;
  std::string netlist_id;
  // Clock time at which the sweep finished, in ms.
  long long finished_at_ms = 0;

  TruthTable();

  bool complete() const;
  std::size_t failed_rows() const;

  // Header `in1,in2,in3,in4,in5,out1,out2,out3,out4,out5`, then 32 rows.
  std::string ToCsv() const;
  // Throws kParse on anything but a header plus 32 ascending rows.
  static TruthTable FromCsv(std::string_view csv, Provenance provenance,
                            std::string netlist_id);

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

// Oracle outputs for every vector.
TruthTable OracleTable(const logic::Netlist& net);

}  // namespace shia::verify

#endif  // SHIA_VERIFY_TRUTH_TABLE_H_

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

#ifndef SHIA_VERIFY_REPORT_H_
#define SHIA_VERIFY_REPORT_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "shia/verify/karnaugh.h"
#include "shia/verify/sweep.h"
#include "shia/verify/truth_table.h"

namespace shia::verify {

// Run settings recorded alongside the artifacts.
struct RunInfo {
  std::string netlist_id;
  long long delay_ms = 500;
  double poll_hz = 10.0;
  std::string clock_mode = "virtual";
  std::string transport = "loopback";
  long long latency_ms = 0;
  std::vector<std::string> faults;
};

struct ReportBundle {
  RunInfo info;
  std::vector<TruthTable> tables;
  // Present when an MRM sweep was compared against a MOM sweep.
  std::optional<Comparison> comparison;
  std::vector<RowObservation> observations;
};

// Writes, under `destination`:
//   <prov>_truth_table.csv                 one per table
//   <prov>_kmap_out<N>.txt                 five renderings per complete table
//   diff_kmap_out<N>.txt                   five renderings when comparing
//   report.json                            everything above as structured data
// and returns the paths written. Throws kConfig for an empty bundle and kIo
// when the destination cannot be written.
std::vector<std::filesystem::path> EmitReport(const ReportBundle& bundle,
                                              const std::filesystem::path& destination);

// The report.json document on its own.
std::string ReportJson(const ReportBundle& bundle);

}  // namespace shia::verify

#endif  // SHIA_VERIFY_REPORT_H_

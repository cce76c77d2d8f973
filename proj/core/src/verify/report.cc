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

#include "shia/verify/report.h"

#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "shia/error.h"

namespace shia::verify {
namespace {

using nlohmann::json;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

template <typename T>
json GridsJson(const Grids<T>& grids) {
  json out = json::array();
  for (const auto& grid : grids) {
    json rows = json::array();
    for (const auto& row : grid) rows.push_back(row);
    out.push_back(rows);
  }
  return out;
}

json TableJson(const TruthTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = {{"inputs", r.inputs.ToString()}, {"outputs", r.outputs.ToString()}};
    if (r.failed) {
      row["failed"] = true;
      row["note"] = r.note;
    }
    rows.push_back(row);
  }
  return {{"provenance", ProvenanceName(t.provenance)},
          {"netlist", t.netlist_id},
          {"finished_at_ms", t.finished_at_ms},
          {"complete", t.complete()},
          {"failed_rows", t.failed_rows()},
          {"rows", rows}};
}

json MapJson(const KarnaughMap& m) {
  return {{"output_pin", m.output_pin}, {"cells", GridsJson(m.cells)}};
}

void WriteFile(const std::filesystem::path& path, const std::string& content,
               std::vector<std::filesystem::path>& written) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
  written.push_back(path);
}

}  // namespace

std::string ReportJson(const ReportBundle& bundle) {
  json doc;
  doc["netlist"] = bundle.info.netlist_id;
  doc["config"] = {{"delay_ms", bundle.info.delay_ms},
                   {"poll_hz", bundle.info.poll_hz},
                   {"clock", bundle.info.clock_mode},
                   {"transport", bundle.info.transport},
                   {"latency_ms", bundle.info.latency_ms},
                   {"faults", bundle.info.faults},
                   {"kmap_layout",
                    "grid=in5, rows=in1in2, cols=in3in4, Gray order 00 01 11 10"}};
  doc["tables"] = json::array();
  doc["maps"] = json::array();
  for (const auto& t : bundle.tables) {
    doc["tables"].push_back(TableJson(t));
    if (t.complete()) {
      json maps = json::array();
      for (const auto& m : BuildKmaps(t)) maps.push_back(MapJson(m));
      doc["maps"].push_back({{"provenance", ProvenanceName(t.provenance)},
                             {"maps", maps}});
    }
  }
  if (bundle.comparison) {
    json diffs = json::array();
    for (const auto& d : bundle.comparison->diffs) {
      json cells = json::array();
      for (const auto& v : d.NonzeroCells()) {
        cells.push_back({{"inputs", v.ToString()}, {"difference", d.at(v)}});
      }
      diffs.push_back({{"output_pin", d.output_pin},
                       {"is_zero", d.is_zero},
                       {"cells", GridsJson(d.cells)},
                       {"nonzero", cells}});
    }
    doc["diff"] = {{"is_zero", bundle.comparison->is_zero},
                   {"nonzero_cells", bundle.comparison->nonzero_cells},
                   {"verdict", bundle.comparison->is_zero ? "ZERO-DISCREPANCY"
                                                          : "DISCREPANCY"},
                   {"pins", diffs}};
  }
  if (!bundle.observations.empty()) {
    json obs = json::array();
    for (const auto& o : bundle.observations) {
      json entry = {{"row", o.row},
                    {"toggles", o.toggles},
                    {"lamps", o.lamps.ToString()},
                    {"failed", o.failed}};
      if (o.board_inputs) entry["board_inputs"] = o.board_inputs->ToString();
      if (!o.reason.empty()) entry["reason"] = o.reason;
      obs.push_back(entry);
    }
    doc["observations"] = obs;
  }
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> EmitReport(const ReportBundle& bundle,
                                              const std::filesystem::path& destination) {
  if (bundle.tables.empty()) {
    throw Error(ErrorCode::kConfig, "nothing to report: no truth tables");
  }
  std::error_code ec;
  std::filesystem::create_directories(destination, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create " + destination.string() + ": " + ec.message());
  }
  std::vector<std::filesystem::path> written;
  for (const auto& t : bundle.tables) {
    const std::string prefix = Lower(ProvenanceName(t.provenance));
    WriteFile(destination / (prefix + "_truth_table.csv"), t.ToCsv(), written);
    if (!t.complete()) continue;
    for (const auto& m : BuildKmaps(t)) {
      WriteFile(destination /
                    (prefix + "_kmap_out" + std::to_string(m.output_pin) + ".txt"),
                m.Render(), written);
    }
  }
  if (bundle.comparison) {
    for (const auto& d : bundle.comparison->diffs) {
      WriteFile(destination / ("diff_kmap_out" + std::to_string(d.output_pin) + ".txt"),
                d.Render(), written);
    }
  }
  WriteFile(destination / "report.json", ReportJson(bundle), written);
  return written;
}

}  // namespace shia::verify

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

// Runs every primary acceptance criterion and prints one PASS/FAIL line per
// criterion. Exits nonzero when any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "shia/board/board_server.h"
#include "shia/error.h"
#include "shia/logic/gate.h"
#include "shia/logic/netlist_io.h"
#include "shia/logic/oracle.h"
#include "shia/logic/simulator.h"
#include "shia/protocol/pin_message.h"
#include "shia/transport/loopback.h"
#include "shia/transport/transcript.h"
#include "shia/verify/procedure.h"
#include "shia/verify/report.h"
#include "support/netlists.h"
#include "support/random_netlist.h"

namespace shia {
namespace {

using logic::GateKind;
using logic::InputVector;
using logic::SignalLevel;
using transport::Millis;
using Clock = std::chrono::steady_clock;

constexpr SignalLevel H = SignalLevel::kHigh;
constexpr SignalLevel L = SignalLevel::kLow;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  Outcome Done(const std::string& summary) const {
    if (failed_ == 0) return {true, summary};
    std::string detail = std::to_string(failed_) + " failed check(s)";
    for (const auto& f : failures_) detail += "; " + f;
    return {false, detail};
  }

 private:
  int failed_ = 0;
  std::vector<std::string> failures_;
};

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// The frozen reference table, read straight from the data file.
std::vector<std::array<int, 5>> FrozenOutputs() {
  std::ifstream in(std::string(SHIA_DATA_DIR) + "/reference_truth_table.csv");
  std::vector<std::array<int, 5>> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<int, 5> out{};
    for (int p = 0; p < 5; ++p) out[p] = line[10 + 2 * p] - '0';
    rows.push_back(out);
  }
  return rows;
}

verify::ProcedureOptions VirtualOptions() {
  verify::ProcedureOptions options;
  options.netlist = logic::ReferenceNetlist();
  options.virtual_time = true;
  return options;
}

Outcome ZeroDiscrepancy() {
  Check check;
  const auto start = Clock::now();
  const verify::ProcedureResult run = verify::RunProcedure(VirtualOptions());
  const double virtual_wall = SecondsSince(start);
  check.Expect(run.mrm.table.complete(), "virtual MRM table incomplete");
  check.Expect(run.comparison.has_value(), "no comparison");
  if (run.comparison) {
    for (const auto& d : run.comparison->diffs) {
      check.Expect(d.is_zero, "diff nonzero on out" + std::to_string(d.output_pin));
    }
  }
  check.Expect(virtual_wall < 2.0, "virtual run took " + Fmt(virtual_wall) + " s");

  verify::ProcedureOptions real = VirtualOptions();
  real.virtual_time = false;
  real.model.delay = Millis{500};
  real.poll_hz = 10.0;
  const auto real_start = Clock::now();
  const verify::ProcedureResult smoke = verify::RunProcedure(real);
  const double real_wall = SecondsSince(real_start);
  check.Expect(smoke.green(), "real-clock run verdict " + smoke.verdict());
  check.Expect(real_wall < 60.0, "real-clock run took " + Fmt(real_wall) + " s");
  return check.Done("5/5 diff maps zero; virtual " + Fmt(virtual_wall) +
                    " s; real-clock smoke " + Fmt(real_wall) + " s, verdict " +
                    smoke.verdict());
}

Outcome OracleEquivalence() {
  Check check;
  const auto frozen = FrozenOutputs();
  check.Expect(frozen.size() == 32, "frozen table has " +
                                        std::to_string(frozen.size()) + " rows");
  std::size_t comparisons = 0;
  auto compare_all = [&](const logic::Netlist& net, const std::string& label) {
    logic::Simulator sim(net);
    for (int i = 0; i < logic::kVectorCount; ++i) {
      const auto v = InputVector::FromIndex(i);
      const bool same = sim.Settle(v).outputs == logic::OracleEval(net, v);
      check.Expect(same, label + " vector " + v.ToString());
      ++comparisons;
    }
  };
  compare_all(logic::ReferenceNetlist(), "reference");
  for (int i = 0; i < logic::kVectorCount && frozen.size() == 32; ++i) {
    const auto out =
        logic::OracleEval(logic::ReferenceNetlist(), InputVector::FromIndex(i));
    for (int p = 0; p < 5; ++p) {
      check.Expect((out.at(p + 1) == H) == (frozen[i][p] == 1),
                   "frozen table mismatch row " + std::to_string(i));
    }
  }
  std::mt19937 rng(0x5e1a);
  for (int n = 0; n < 100; ++n) {
    const logic::Netlist net = testing::RandomNetlist(rng, 12);
    check.Expect(net.blocks.size() <= 12, "random netlist too large");
    compare_all(net, "random #" + std::to_string(n));
  }
  return check.Done("reference + 100 random netlists, " +
                    std::to_string(comparisons) + " vectors settle == oracle");
}

Outcome GateTables() {
  Check check;
  int rows = 0;
  struct Table {
    GateKind kind;
    std::function<bool(bool, bool)> f;
  };
  const Table tables[] = {
      {GateKind::kNand, [](bool a, bool b) { return !(a && b); }},
      {GateKind::kAnd, [](bool a, bool b) { return a && b; }},
      {GateKind::kOr, [](bool a, bool b) { return a || b; }},
      {GateKind::kXor, [](bool a, bool b) { return a != b; }},
  };
  for (const auto& t : tables) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const std::array<SignalLevel, 2> in = {a ? H : L, b ? H : L};
        const bool y = logic::EvalGate(t.kind, in) == H;
        check.Expect(y == t.f(a, b), std::string(logic::GateKindName(t.kind)) +
                                         "(" + std::to_string(a) + "," +
                                         std::to_string(b) + ")");
        ++rows;
      }
    }
  }
  for (int a = 0; a < 2; ++a) {
    const std::array<SignalLevel, 1> in = {a ? H : L};
    check.Expect((logic::EvalGate(GateKind::kNot, in) == H) == !a, "NOT");
    ++rows;
  }
  // Splitter: both branches carry the input (seen through two NOTs).
  logic::Simulator sim(testing::SplitterNots());
  for (int i = 0; i < logic::kVectorCount; ++i) {
    const auto v = InputVector::FromIndex(i);
    const auto out = sim.Settle(v).outputs;
    const SignalLevel expected = v.at(1) == H ? L : H;
    check.Expect(out.at(1) == expected && out.at(2) == expected,
                 "SPLITTER " + v.ToString());
  }
  rows += 2;
  return check.Done("NAND Y = not(A and B) on 4 pairs; AND, OR, XOR, NOT, "
                    "SPLITTER exhaustive (" + std::to_string(rows) + " rows)");
}

Outcome ProtocolConformance() {
  Check check;
  int round_trips = 0;
  for (int pin = 1; pin <= 5; ++pin) {
    for (SignalLevel level : {L, H}) {
      const auto f = protocol::EncodePinMessage(pin, level);
      check.Expect(protocol::DecodePinMessage(f.view()) ==
                       protocol::Decoded{pin, level},
                   "round trip " + f.str());
      ++round_trips;
    }
  }
  auto bytes_of = [](int pin, SignalLevel level) {
    const auto f = protocol::EncodePinMessage(pin, level);
    return std::make_pair(static_cast<unsigned char>(f.bytes()[0]),
                          static_cast<unsigned char>(f.bytes()[1]));
  };
  check.Expect(bytes_of(1, H) == std::make_pair<unsigned char, unsigned char>(0x31, 0x31), "\"11\" bytes");
  check.Expect(bytes_of(1, L) == std::make_pair<unsigned char, unsigned char>(0x31, 0x30), "\"10\" bytes");
  check.Expect(bytes_of(2, H) == std::make_pair<unsigned char, unsigned char>(0x32, 0x31), "\"21\" bytes");

  const auto start = Clock::now();
  int rejected = 0;
  int accepted = 0;
  for (int a = 0; a < 256; ++a) {
    for (int b = 0; b < 256; ++b) {
      const char frame[2] = {static_cast<char>(a), static_cast<char>(b)};
      try {
        protocol::DecodePinMessage(std::string_view(frame, 2));
        ++accepted;
      } catch (const Error&) {
        ++rejected;
      }
    }
  }
  const double scan = SecondsSince(start);
  check.Expect(rejected == 65526, "rejected " + std::to_string(rejected));
  check.Expect(accepted == 10, "accepted " + std::to_string(accepted));
  check.Expect(scan < 1.0, "scan took " + Fmt(scan) + " s");
  return check.Done(std::to_string(round_trips) + " round trips; " +
                    std::to_string(rejected) + " invalid frames rejected in " +
                    Fmt(scan) + " s; 11/10/21 = 3131/3130/3231");
}

Outcome TimingContract() {
  Check check;
  verify::ProcedureOptions options = VirtualOptions();
  options.transcript = std::make_shared<transport::Transcript>();
  const verify::ProcedureResult run = verify::RunProcedure(options);

  long long min_gap = -1;
  int reads = 0;
  std::optional<Millis> last_tx;
  for (const auto& e : run.model_log) {
    if (e.kind == model::ModelLogEntry::Kind::kTransmit) last_tx = e.at;
    if (e.kind != model::ModelLogEntry::Kind::kReceiveRead) continue;
    ++reads;
    check.Expect(last_tx.has_value(), "read with no prior transmit");
    if (!last_tx) continue;
    const long long gap = (e.at - *last_tx).count();
    check.Expect(gap >= 500, "read " + std::to_string(gap) + " ms after transmit");
    if (min_gap < 0 || gap < min_gap) min_gap = gap;
  }
  check.Expect(reads >= 32, "only " + std::to_string(reads) + " reads");

  std::vector<Millis> delivered;
  for (const auto& e : options.transcript->entries()) {
    if (e.kind != transport::TranscriptEntry::Kind::kDeliver ||
        e.channel != "model->board") {
      continue;
    }
    for (std::size_t i = 0; i + 1 < e.bytes.size(); i += 2) delivered.push_back(e.at);
  }
  std::vector<Millis> applied;
  for (const auto& e : run.board_log) {
    if (e.kind == board::BoardLogEntry::Kind::kRx) applied.push_back(e.at);
  }
  check.Expect(delivered.size() == applied.size(),
               std::to_string(delivered.size()) + " frames delivered, " +
                   std::to_string(applied.size()) + " applied");
  long long max_lag = 0;
  for (std::size_t i = 0; i < std::min(delivered.size(), applied.size()); ++i) {
    const long long lag = (applied[i] - delivered[i]).count();
    check.Expect(lag >= 0 && lag <= 100,
                 "frame " + std::to_string(i) + " applied after " +
                     std::to_string(lag) + " ms");
    max_lag = std::max(max_lag, lag);
  }
  return check.Done(std::to_string(reads) + " reads, min gap after transmit " +
                    std::to_string(min_gap) + " ms; " +
                    std::to_string(applied.size()) +
                    " commands applied, max lag " + std::to_string(max_lag) +
                    " ms (poll period 100 ms)");
}

// Cells (pin, row) where a fault must differ from the fault-free table.
std::set<std::pair<int, int>> PredictedCells(const std::string& fault,
                                             const std::vector<std::array<int, 5>>& t) {
  std::set<std::pair<int, int>> cells;
  for (int row = 0; row < static_cast<int>(t.size()); ++row) {
    if (fault == "stuck_low:3" && t[row][2] == 1) cells.insert({3, row});
    if (fault == "stuck_high:2" && t[row][1] == 0) cells.insert({2, row});
    if (fault == "inverted:4") cells.insert({4, row});
    if (fault == "swap_wiring:1:2" && t[row][0] != t[row][1]) {
      cells.insert({1, row});
      cells.insert({2, row});
    }
  }
  return cells;
}

Outcome FaultDetection() {
  Check check;
  const auto frozen = FrozenOutputs();
  std::string summary;
  for (const std::string fault :
       {"stuck_low:3", "stuck_high:2", "inverted:4", "swap_wiring:1:2"}) {
    verify::ProcedureOptions options = VirtualOptions();
    options.faults = {board::FaultSpec::Parse(fault)};
    const verify::ProcedureResult run = verify::RunProcedure(options);
    check.Expect(run.comparison.has_value(), fault + ": no comparison");
    if (!run.comparison) continue;
    check.Expect(!run.comparison->is_zero, fault + ": diff is zero");
    std::set<std::pair<int, int>> observed;
    for (const auto& d : run.comparison->diffs) {
      for (const auto& v : d.NonzeroCells()) observed.insert({d.output_pin, v.index()});
    }
    const auto predicted = PredictedCells(fault, frozen);
    check.Expect(!predicted.empty(), fault + ": empty prediction");
    check.Expect(observed == predicted,
                 fault + ": observed " + std::to_string(observed.size()) +
                     " cells, predicted " + std::to_string(predicted.size()));
    if (!summary.empty()) summary += ", ";
    summary += fault + "=" + std::to_string(observed.size());
  }
  return check.Done("nonzero cells match prediction: " + summary);
}

Outcome GpioMapping() {
  Check check;
  transport::VirtualClock clock;
  auto [host, board_end] =
      transport::OpenLoopback(clock, protocol::SerialConfig{}, Millis{0});
  board::BoardServer server(board_end, board::Board(logic::ReferenceNetlist()),
                            clock);
  server.Start();
  for (int pin = 1; pin <= 5; ++pin) {
    host.tx->Write(std::to_string(pin) + "1");
    clock.Advance(Millis{100});
  }
  std::vector<board::BoardLogEntry> rx;
  for (const auto& e : server.log()) {
    if (e.kind == board::BoardLogEntry::Kind::kRx) rx.push_back(e);
  }
  check.Expect(rx.size() == 5, std::to_string(rx.size()) + " RX entries");
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const int pin = static_cast<int>(i) + 1;
    const std::string line = "RX " + std::to_string(pin) + "1 -> GPIO" +
                             std::to_string(20 + pin) + " HIGH";
    check.Expect(rx[i].gpio == 20 + pin && rx[i].line == line,
                 "log '" + rx[i].line + "'");
    check.Expect(server.board().gpio(20 + pin) == H,
                 "GPIO" + std::to_string(20 + pin) + " not high");
  }
  server.Stop();
  return check.Done("11..51 -> GPIO21..25 in board log");
}

Outcome Determinism() {
  Check check;
  std::array<std::string, 2> transcripts;
  std::array<std::string, 2> reports;
  for (int i = 0; i < 2; ++i) {
    verify::ProcedureOptions options = VirtualOptions();
    options.transcript = std::make_shared<transport::Transcript>();
    const verify::ProcedureResult run = verify::RunProcedure(options);
    transcripts[i] = options.transcript->Render();
    reports[i] = verify::ReportJson(run.Bundle(options));
  }
  check.Expect(!transcripts[0].empty(), "empty transcript");
  check.Expect(transcripts[0] == transcripts[1], "transcripts differ");
  check.Expect(reports[0] == reports[1], "reports differ");
  return check.Done("transcripts identical (" +
                    std::to_string(transcripts[0].size()) +
                    " bytes), reports identical (" +
                    std::to_string(reports[0].size()) + " bytes)");
}

}  // namespace
}  // namespace shia

int main() {
  using Criterion = std::pair<const char*, std::function<shia::Outcome()>>;
  const Criterion criteria[] = {
      {"zero-discrepancy", shia::ZeroDiscrepancy},
      {"oracle-equivalence", shia::OracleEquivalence},
      {"gate-tables", shia::GateTables},
      {"protocol-conformance", shia::ProtocolConformance},
      {"timing-contract", shia::TimingContract},
      {"fault-detection", shia::FaultDetection},
      {"gpio-mapping", shia::GpioMapping},
      {"determinism", shia::Determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    shia::Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name << ": "
              << outcome.detail << std::endl;
  }
  std::cout << (failed == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failed))
            << std::endl;
  return failed == 0 ? 0 : 1;
}

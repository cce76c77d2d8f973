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

#include <benchmark/benchmark.h>

#include "shia/logic/netlist_io.h"
#include "shia/verify/karnaugh.h"
#include "shia/verify/procedure.h"
#include "shia/verify/report.h"
#include "shia/verify/sweep.h"
#include "shia/verify/truth_table.h"

namespace shia {
namespace {

void BM_MomSweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::MomSweep(logic::ReferenceNetlist()));
  }
}
BENCHMARK(BM_MomSweep);

void BM_Compare(benchmark::State& state) {
  const auto table = verify::OracleTable(logic::ReferenceNetlist());
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::Compare(table, table));
  }
}
BENCHMARK(BM_Compare);

void BM_VirtualProcedure(benchmark::State& state) {
  verify::ProcedureOptions options;
  options.netlist = logic::ReferenceNetlist();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::RunProcedure(options));
  }
}
BENCHMARK(BM_VirtualProcedure)->Unit(benchmark::kMillisecond);

void BM_ReportJson(benchmark::State& state) {
  verify::ProcedureOptions options;
  options.netlist = logic::ReferenceNetlist();
  const auto bundle = verify::RunProcedure(options).Bundle(options);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::ReportJson(bundle));
  }
}
BENCHMARK(BM_ReportJson)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace shia

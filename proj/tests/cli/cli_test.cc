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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <string>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;
using ::testing::StartsWith;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult Shia(const std::string& args) {
  const std::string cmd = std::string(SHIA_BINARY) + " " + args + " 2>&1";
  CommandResult run;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return run;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
    run.output.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string LastLine(const std::string& text) {
  std::string trimmed = text;
  while (!trimmed.empty() && trimmed.back() == '\n') trimmed.pop_back();
  return trimmed.substr(trimmed.rfind('\n') + 1);
}

std::string Reference() { return std::string(SHIA_DATA_DIR) + "/reference_chassis.json"; }

TEST(CliTest, ValidateReference) {
  const CommandResult run = Shia("validate --netlist " + Reference());
  EXPECT_EQ(run.exit_code, 0) << run.output;
  EXPECT_EQ(LastLine(run.output),
            "SUMMARY command=validate verdict=VALID violations=0");
}

TEST(CliTest, ValidateRejectsBrokenNetlist) {
  const fs::path path = fs::temp_directory_path() / "shia_cli_broken.json";
  std::ifstream in(Reference());
  std::string doc((std::istreambuf_iterator<char>(in)), {});
  doc.replace(doc.find("\"nand_f.in2\""), 12, "\"nand_f.in1\"");
  std::ofstream(path) << doc;
  const CommandResult run = Shia("validate --netlist " + path.string());
  EXPECT_EQ(run.exit_code, 1) << run.output;
  EXPECT_THAT(run.output, HasSubstr("nand_f"));
  EXPECT_THAT(LastLine(run.output),
              StartsWith("SUMMARY command=validate verdict=INVALID"));
  fs::remove(path);
}

TEST(CliTest, MomPrintsOracleTable) {
  const CommandResult run = Shia("mom");
  EXPECT_EQ(run.exit_code, 0) << run.output;
  std::ifstream in(std::string(SHIA_DATA_DIR) + "/reference_truth_table.csv");
  std::string csv((std::istreambuf_iterator<char>(in)), {});
  EXPECT_THAT(run.output, HasSubstr(csv));
  EXPECT_THAT(LastLine(run.output), StartsWith("SUMMARY command=mom verdict=OK rows=32"));
}

TEST(CliTest, VirtualMrmIsGreen) {
  const CommandResult run = Shia("mrm --virtual-time");
  EXPECT_EQ(run.exit_code, 0) << run.output;
  EXPECT_THAT(run.output, HasSubstr("verdict: ZERO-DISCREPANCY"));
  EXPECT_THAT(LastLine(run.output),
              StartsWith("SUMMARY verdict=ZERO-DISCREPANCY rows=32 failed_rows=0 "
                         "nonzero_cells=0"));
}

TEST(CliTest, FaultMakesVerdictRed) {
  const CommandResult run = Shia("mrm --virtual-time --fault stuck_low:3");
  EXPECT_EQ(run.exit_code, 1) << run.output;
  EXPECT_THAT(LastLine(run.output),
              StartsWith("SUMMARY verdict=DISCREPANCY rows=32 failed_rows=0 "
                         "nonzero_cells=24"));
}

TEST(CliTest, InvalidFaultIsAUsageError) {
  const CommandResult run = Shia("mrm --virtual-time --fault melted:3");
  EXPECT_EQ(run.exit_code, 2) << run.output;
  EXPECT_EQ(LastLine(run.output), "SUMMARY verdict=ERROR error=invalid-fault");
}

TEST(CliTest, MissingSubcommandIsAUsageError) {
  EXPECT_EQ(Shia("").exit_code, 2);
  EXPECT_EQ(Shia("frobnicate").exit_code, 2);
}

TEST(CliTest, PanelRefusesVirtualTime) {
  const CommandResult run = Shia("panel --virtual-time --http-port 0 --run-for-ms 10");
  EXPECT_EQ(run.exit_code, 2) << run.output;
  EXPECT_THAT(LastLine(run.output), HasSubstr("error="));
}

TEST(CliTest, UnreachableBoardIsAnError) {
  const CommandResult run = Shia("mrm --transport 127.0.0.1:1");
  EXPECT_EQ(run.exit_code, 2) << run.output;
  EXPECT_THAT(LastLine(run.output), StartsWith("SUMMARY verdict=ERROR"));
}

TEST(CliTest, OutWritesReportFiles) {
  const fs::path dir = fs::temp_directory_path() / "shia_cli_out";
  fs::remove_all(dir);
  const CommandResult run = Shia("mrm --virtual-time --out " + dir.string());
  EXPECT_EQ(run.exit_code, 0) << run.output;
  for (const char* name : {"mom_truth_table.csv", "mrm_truth_table.csv",
                           "diff_kmap_out1.txt", "report.json"}) {
    EXPECT_TRUE(fs::exists(dir / name)) << name;
  }
  fs::remove_all(dir);
}

TEST(CliTest, MrmOverTcpAgainstBoardProcess) {
  const std::string cmd = std::string(SHIA_BINARY) +
                          " board --listen 127.0.0.1:0 --once --poll-hz 50 2>&1";
  FILE* board = popen(cmd.c_str(), "r");
  ASSERT_NE(board, nullptr);
  std::array<char, 512> line{};
  ASSERT_NE(fgets(line.data(), line.size(), board), nullptr);
  std::smatch m;
  const std::string first(line.data());
  ASSERT_TRUE(std::regex_search(first, m, std::regex(R"(\(port (\d+)\))"))) << first;

  const CommandResult run = Shia("mrm --delay-ms 50 --poll-hz 50 --transport 127.0.0.1:" +
                       m[1].str());
  EXPECT_EQ(run.exit_code, 0) << run.output;
  EXPECT_THAT(LastLine(run.output), StartsWith("SUMMARY verdict=ZERO-DISCREPANCY"));

  std::string board_out;
  while (fgets(line.data(), line.size(), board)) board_out += line.data();
  EXPECT_EQ(WEXITSTATUS(pclose(board)), 0) << board_out;
  EXPECT_THAT(board_out, HasSubstr("RX 11 -> GPIO21 HIGH"));
}

}  // namespace

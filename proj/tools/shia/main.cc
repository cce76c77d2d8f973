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

// Command-line front end: model-only and integrated sweeps, the board
// emulator, the operator panel and netlist validation.

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "shia/board/board.h"
#include "shia/board/board_server.h"
#include "shia/error.h"
#include "shia/logic/netlist.h"
#include "shia/logic/netlist_io.h"
#include "shia/model/model_server.h"
#include "shia/panel/panel_service.h"
#include "shia/transport/clock.h"
#include "shia/transport/loopback.h"
#include "shia/transport/stream.h"
#include "shia/verify/procedure.h"
#include "shia/verify/report.h"
#include "shia/verify/sweep.h"

namespace shia::cli {
namespace {

using transport::Millis;

constexpr int kExitGreen = 0;
constexpr int kExitRed = 1;
constexpr int kExitError = 2;

struct RunConfig {
  std::string netlist;
  long long delay_ms = 500;
  long long reply_timeout_ms = -1;
  double poll_hz = 10.0;
  bool virtual_time = false;
  std::string transport = "loopback";
  std::vector<std::string> faults;
  std::string out;
  std::string listen = ":9000";
  int http_port = 8743;
  std::string http_host = "127.0.0.1";
  long long latency_ms = 0;
  std::string board = "none";
  std::string static_dir;
  bool once = false;
  long long run_for_ms = 0;
  bool print_netlist = false;
};

std::atomic<bool> g_interrupted{false};

void OnSignal(int) { g_interrupted = true; }

void InstallSignalHandlers() {
  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);
}

// Waits for SIGINT/SIGTERM, `done` or the optional deadline.
void WaitForShutdown(const std::function<bool()>& done, long long run_for_ms) {
  const auto start = std::chrono::steady_clock::now();
  while (!g_interrupted && !done()) {
    if (run_for_ms > 0 && std::chrono::steady_clock::now() - start >=
                              std::chrono::milliseconds(run_for_ms)) {
      return;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
}

void Summary(const std::string& fields) {
  std::cout << "SUMMARY " << fields << std::endl;
}

logic::Netlist LoadConfiguredNetlist(const RunConfig& cfg) {
  if (cfg.netlist.empty()) return logic::ReferenceNetlist();
  return logic::LoadNetlistFile(cfg.netlist);
}

std::vector<board::FaultSpec> ParseFaults(const RunConfig& cfg) {
  std::vector<board::FaultSpec> faults;
  for (const auto& item : cfg.faults) {
    std::stringstream list(item);
    std::string one;
    while (std::getline(list, one, ',')) {
      if (!one.empty()) faults.push_back(board::FaultSpec::Parse(one));
    }
  }
  return faults;
}

model::ModelConfig ModelConfigOf(const RunConfig& cfg) {
  if (cfg.delay_ms < 0) throw Error(ErrorCode::kConfig, "--delay-ms must be >= 0");
  if (cfg.poll_hz <= 0) throw Error(ErrorCode::kConfig, "--poll-hz must be > 0");
  if (cfg.latency_ms < 0) {
    throw Error(ErrorCode::kConfig, "--latency-ms must be >= 0");
  }
  model::ModelConfig config;
  config.delay = Millis{cfg.delay_ms};
  if (cfg.reply_timeout_ms >= 0) config.reply_timeout = Millis{cfg.reply_timeout_ms};
  return config;
}

void MaybeEmit(const RunConfig& cfg, const verify::ReportBundle& bundle) {
  if (cfg.out.empty()) return;
  const auto written = verify::EmitReport(bundle, cfg.out);
  std::cout << "wrote " << written.size() << " files to " << cfg.out << "\n";
}

void PrintTable(const verify::TruthTable& table) {
  std::cout << table.ToCsv();
}

int CmdValidate(const RunConfig& cfg) {
  std::vector<logic::Violation> violations;
  std::optional<logic::Netlist> net;
  try {
    net = LoadConfiguredNetlist(cfg);
  } catch (const logic::ValidationError& e) {
    violations = e.violations();
  }
  for (const auto& v : violations) {
    std::cout << "violation [" << logic::ViolationKindName(v.kind) << "] "
              << v.subject << ": " << v.message << "\n";
  }
  if (net) {
    std::cout << "netlist '" << net->name << "' is valid: " << net->blocks.size()
              << " blocks, " << net->connectors.size() << " connectors\n";
    if (cfg.print_netlist) std::cout << logic::EmitNetlist(*net);
  }
  Summary(std::string("command=validate verdict=") + (net ? "VALID" : "INVALID") +
          " violations=" + std::to_string(violations.size()));
  return net ? kExitGreen : kExitRed;
}

int CmdMom(const RunConfig& cfg) {
  const logic::Netlist net = LoadConfiguredNetlist(cfg);
  verify::TruthTable table = verify::MomSweep(net);
  PrintTable(table);
  verify::ReportBundle bundle;
  bundle.info.netlist_id = net.name;
  bundle.info.delay_ms = cfg.delay_ms;
  bundle.info.poll_hz = cfg.poll_hz;
  bundle.info.clock_mode = "virtual";
  bundle.info.transport = "none";
  bundle.tables = {table};
  MaybeEmit(cfg, bundle);
  Summary("command=mom verdict=OK rows=" + std::to_string(table.rows.size()) +
          " netlist=" + net.name);
  return kExitGreen;
}

int CmdMrm(const RunConfig& cfg) {
  verify::ProcedureOptions options;
  options.netlist = LoadConfiguredNetlist(cfg);
  options.model = ModelConfigOf(cfg);
  options.poll_hz = cfg.poll_hz;
  options.latency = Millis{cfg.latency_ms};
  options.faults = ParseFaults(cfg);
  options.virtual_time = cfg.virtual_time;
  if (cfg.transport != "loopback") options.stream_address = cfg.transport;

  const verify::ProcedureResult result = verify::RunProcedure(options);
  for (const auto& obs : result.mrm.observations) {
    std::cout << "row " << logic::InputVector::FromIndex(obs.row).ToString()
              << " toggles=";
    for (std::size_t i = 0; i < obs.toggles.size(); ++i) {
      std::cout << (i ? "," : "") << obs.toggles[i];
    }
    if (obs.toggles.empty()) std::cout << "-";
    if (obs.board_inputs) std::cout << " board=" << obs.board_inputs->ToString();
    std::cout << " lamps=" << obs.lamps.ToString();
    if (obs.failed) std::cout << " FAILED (" << obs.reason << ")";
    std::cout << "\n";
  }
  std::size_t nonzero = 0;
  if (result.comparison) {
    nonzero = result.comparison->nonzero_cells;
    for (const auto& diff : result.comparison->diffs) {
      if (diff.is_zero) continue;
      std::cout << diff.Render();
      for (const auto& v : diff.NonzeroCells()) {
        std::cout << "diff out" << diff.output_pin << " at " << v.ToString()
                  << ": " << diff.at(v) << "\n";
      }
    }
  }
  MaybeEmit(cfg, result.Bundle(options));
  std::cout << "verdict: " << result.verdict() << "\n";
  Summary("verdict=" + result.verdict() + " rows=" +
          std::to_string(result.mrm.table.rows.size()) + " failed_rows=" +
          std::to_string(result.mrm.table.failed_rows()) +
          " nonzero_cells=" + std::to_string(nonzero) +
          " elapsed_ms=" + std::to_string(result.elapsed.count()));
  return result.green() ? kExitGreen : kExitRed;
}

int CmdBoard(const RunConfig& cfg) {
  if (cfg.virtual_time) {
    throw Error(ErrorCode::kClockMode, "the board emulator needs a real clock");
  }
  if (cfg.poll_hz <= 0) throw Error(ErrorCode::kConfig, "--poll-hz must be > 0");
  const logic::Netlist net = LoadConfiguredNetlist(cfg);
  const auto faults = ParseFaults(cfg);
  board::Board prototype(net);
  for (const auto& f : faults) prototype.InjectFault(f);

  transport::StreamListener listener(cfg.listen);
  std::cout << "board listening on " << cfg.listen << " (port "
            << listener.port() << ")" << std::endl;
  InstallSignalHandlers();

  std::mutex mu;
  std::shared_ptr<board::BoardServer> current;
  std::atomic<bool> finished{false};
  std::size_t sessions = 0;

  std::thread acceptor([&] {
    transport::RealClock clock;
    for (;;) {
      transport::Endpoint endpoint;
      try {
        endpoint = listener.Accept();
      } catch (const Error&) {
        break;
      }
      ++sessions;
      std::cout << "session " << sessions << " from " << endpoint.description
                << std::endl;
      board::BoardServerOptions options;
      options.poll_hz = cfg.poll_hz;
      options.log_sink = [](const std::string& line) {
        std::cout << line << std::endl;
      };
      auto server = std::make_shared<board::BoardServer>(
          std::move(endpoint), prototype, clock, options);
      {
        std::lock_guard lock(mu);
        current = server;
      }
      server->Start();
      server->Wait();
      {
        std::lock_guard lock(mu);
        current.reset();
      }
      std::cout << "session " << sessions << " closed" << std::endl;
      if (cfg.once) break;
    }
    finished = true;
  });

  WaitForShutdown([&] { return finished.load(); }, cfg.run_for_ms);
  listener.Close();
  {
    std::lock_guard lock(mu);
    if (current) current->Stop();
  }
  acceptor.join();
  std::cout << "board stopped" << std::endl;
  Summary("command=board sessions=" + std::to_string(sessions));
  return kExitGreen;
}

int CmdPanel(const RunConfig& cfg) {
  if (cfg.virtual_time) {
    throw Error(ErrorCode::kClockMode,
                "the interactive panel needs a real clock; drop --virtual-time");
  }
  const logic::Netlist net = LoadConfiguredNetlist(cfg);
  const model::ModelConfig model_config = ModelConfigOf(cfg);
  transport::RealClock clock;
  model::ModelServer server(net, clock, model_config);

  panel::PanelOptions options;
  options.bind = cfg.http_host + ":" + std::to_string(cfg.http_port);
  if (!cfg.static_dir.empty()) options.static_dir = cfg.static_dir;
  options.latency = Millis{cfg.latency_ms};
  options.board_poll_period =
      Millis{static_cast<long long>(1000.0 / cfg.poll_hz + 0.5)};

  std::unique_ptr<board::BoardServer> board_server;
  if (cfg.board == "loopback") {
    transport::LoopbackOptions link;
    link.latency = Millis{cfg.latency_ms};
    link.first_name = "model";
    link.second_name = "board";
    auto [model_end, board_end] = transport::OpenLoopback(clock, link);
    board::Board board(net);
    for (const auto& f : ParseFaults(cfg)) board.InjectFault(f);
    board::BoardServerOptions board_options;
    board_options.poll_hz = cfg.poll_hz;
    board_server = std::make_unique<board::BoardServer>(
        std::move(board_end), std::move(board), clock, board_options);
    server.AttachEndpoint(std::move(model_end));
    board_server->Start();
    options.mrm_available = true;
    options.board_poll_period = board_server->poll_period();
    options.board_inputs = [&board_server]() -> std::optional<logic::InputVector> {
      return board_server->board().inputs();
    };
  } else if (cfg.board != "none") {
    server.AttachEndpoint(transport::ConnectStream(cfg.board));
    options.mrm_available = true;
  }

  panel::PanelService service(server, clock, options);
  std::cout << "panel: " << service.url() << " (mode MOM, board " << cfg.board
            << ")" << std::endl;
  InstallSignalHandlers();
  WaitForShutdown([] { return false; }, cfg.run_for_ms);
  service.Stop();
  if (board_server) board_server->Stop();
  Summary("command=panel url=" + service.url());
  return kExitGreen;
}

void AddCommon(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--netlist", cfg.netlist,
                  "Netlist document (default: built-in reference chassis)");
  cmd->add_option("--delay-ms", cfg.delay_ms,
                  "Wait between transmit and reply read")
      ->capture_default_str();
  cmd->add_option("--poll-hz", cfg.poll_hz, "Board loop rate")
      ->capture_default_str();
  cmd->add_flag("--virtual-time", cfg.virtual_time,
                "Run on a deterministic virtual clock");
  cmd->add_option("--fault", cfg.faults,
                  "Board fault(s) KIND:PIN[,...]; swap_wiring:A:B");
  cmd->add_option("--latency-ms", cfg.latency_ms, "One-way loopback latency")
      ->capture_default_str();
}

int Run(int argc, char** argv) {
  CLI::App app{"SHIA: model-to-hardware test harness"};
  app.set_config("--config", "", "TOML/INI file with option values");
  app.require_subcommand(1);
  RunConfig cfg;

  auto* validate = app.add_subcommand("validate", "Check a netlist document");
  validate->add_option("--netlist", cfg.netlist, "Netlist document");
  validate->add_flag("--print", cfg.print_netlist,
                     "Print the canonical document when valid");

  auto* mom = app.add_subcommand("mom", "Model-only truth-table sweep");
  AddCommon(mom, cfg);
  mom->add_option("--out", cfg.out, "Report directory");

  auto* mrm = app.add_subcommand(
      "mrm", "Sweep the board in replacement mode and compare with the model");
  AddCommon(mrm, cfg);
  mrm->add_option("--transport", cfg.transport, "loopback or host:port")
      ->capture_default_str();
  mrm->add_option("--reply-timeout-ms", cfg.reply_timeout_ms,
                  "Reply window after the delay (default 2 x delay)");
  mrm->add_option("--out", cfg.out, "Report directory");

  auto* board = app.add_subcommand("board", "Serve the emulated board over TCP");
  AddCommon(board, cfg);
  board->add_option("--listen", cfg.listen, "host:port to bind")
      ->capture_default_str();
  board->add_flag("--once", cfg.once, "Exit after the first session closes");
  board->add_option("--run-for-ms", cfg.run_for_ms,
                    "Exit after this long (0 = until interrupted)");

  auto* panel = app.add_subcommand("panel", "Serve the operator panel");
  AddCommon(panel, cfg);
  panel->add_option("--http-port", cfg.http_port, "Panel HTTP port")
      ->capture_default_str();
  panel->add_option("--listen", cfg.http_host, "Panel bind host")
      ->capture_default_str();
  panel->add_option("--board", cfg.board, "none, loopback or host:port")
      ->capture_default_str();
  panel->add_option("--static", cfg.static_dir, "Panel UI asset directory");
  panel->add_option("--reply-timeout-ms", cfg.reply_timeout_ms,
                    "Reply window after the delay (default 2 x delay)");
  panel->add_option("--run-for-ms", cfg.run_for_ms,
                    "Exit after this long (0 = until interrupted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0) Summary("verdict=ERROR error=usage");
    return code == 0 ? kExitGreen : kExitError;
  }

  try {
    if (*validate) return CmdValidate(cfg);
    if (*mom) return CmdMom(cfg);
    if (*mrm) return CmdMrm(cfg);
    if (*board) return CmdBoard(cfg);
    if (*panel) return CmdPanel(cfg);
  } catch (const logic::ValidationError& e) {
    for (const auto& v : e.violations()) {
      std::cerr << "violation [" << logic::ViolationKindName(v.kind) << "] "
                << v.subject << ": " << v.message << "\n";
    }
    Summary("verdict=ERROR error=validation violations=" +
            std::to_string(e.violations().size()));
    return kExitError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    Summary(std::string("verdict=ERROR error=") +
            std::string(ErrorCodeName(e.code())));
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    Summary("verdict=ERROR error=internal");
    return kExitError;
  }
  return kExitError;
}

}  // namespace
}  // namespace shia::cli

int main(int argc, char** argv) { return shia::cli::Run(argc, argv); }

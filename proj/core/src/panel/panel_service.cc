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

#include "shia/panel/panel_service.h"

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <nlohmann/json.hpp>

#include "shia/error.h"
#include "shia/transport/stream.h"
#include "shia/verify/karnaugh.h"

namespace shia::panel {
namespace {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;
using nlohmann::json;

int Bit(logic::SignalLevel level) { return logic::ToBit(level); }

model::Mode RequireMode(const json& doc) {
  if (!doc.contains("mode") || !doc["mode"].is_string()) {
    throw Error(ErrorCode::kParse, "missing string field 'mode'");
  }
  auto mode = model::ParseMode(doc["mode"].get<std::string>());
  if (!mode) {
    throw Error(ErrorCode::kParse,
                "unknown mode '" + doc["mode"].get<std::string>() + "'");
  }
  return *mode;
}

std::string_view ContentType(const std::filesystem::path& path) {
  const std::string ext = path.extension().string();
  if (ext == ".html" || ext == ".htm") return "text/html; charset=utf-8";
  if (ext == ".js" || ext == ".mjs") return "text/javascript";
  if (ext == ".css") return "text/css";
  if (ext == ".json" || ext == ".map") return "application/json";
  if (ext == ".svg") return "image/svg+xml";
  if (ext == ".png") return "image/png";
  if (ext == ".ico") return "image/x-icon";
  return "application/octet-stream";
}

// Resolves a request target inside `root`; nullopt for anything escaping it.
std::optional<std::filesystem::path> ResolveAsset(
    const std::filesystem::path& root, std::string_view target) {
  std::string path(target.substr(0, target.find('?')));
  if (path.empty() || path == "/") path = "/index.html";
  if (path.find("..") != std::string::npos) return std::nullopt;
  std::filesystem::path full = root / path.substr(1);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(full, ec)) return std::nullopt;
  return full;
}

}  // namespace

PanelCommand ParsePanelCommand(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorCode::kParse, "command is not a JSON object");
  }
  if (!doc.contains("type") || !doc["type"].is_string()) {
    throw Error(ErrorCode::kParse, "missing string field 'type'");
  }
  const std::string type = doc["type"].get<std::string>();
  PanelCommand cmd;
  if (type == "set_pin") {
    cmd.kind = PanelCommand::Kind::kSetPin;
    if (!doc.contains("pin") || !doc["pin"].is_number_integer()) {
      throw Error(ErrorCode::kParse, "missing integer field 'pin'");
    }
    cmd.pin = doc["pin"].get<int>();
    if (cmd.pin < 1 || cmd.pin > logic::kChassisPins) {
      throw Error(ErrorCode::kInvalidPin,
                  "pin out of range: " + std::to_string(cmd.pin));
    }
    if (!doc.contains("level")) {
      throw Error(ErrorCode::kParse, "missing field 'level'");
    }
    const json& level = doc["level"];
    if (level.is_boolean()) {
      cmd.level = logic::FromBool(level.get<bool>());
    } else if (level.is_number_integer() &&
               (level.get<int>() == 0 || level.get<int>() == 1)) {
      cmd.level = logic::FromBool(level.get<int>() == 1);
    } else {
      throw Error(ErrorCode::kInvalidLevel, "level must be 0 or 1");
    }
  } else if (type == "set_mode") {
    cmd.kind = PanelCommand::Kind::kSetMode;
    cmd.mode = RequireMode(doc);
  } else if (type == "run_sweep") {
    cmd.kind = PanelCommand::Kind::kRunSweep;
    cmd.mode = RequireMode(doc);
  } else if (type == "request_snapshot") {
    cmd.kind = PanelCommand::Kind::kRequestSnapshot;
  } else {
    throw Error(ErrorCode::kParse, "unknown command type '" + type + "'");
  }
  return cmd;
}

std::string StateMessage(const model::ModelSnapshot& snap) {
  json inputs = json::array();
  json outputs = json::array();
  for (int pin = 1; pin <= logic::kChassisPins; ++pin) {
    inputs.push_back(Bit(snap.state.input_attrs.at(pin)));
    outputs.push_back(Bit(snap.state.output_attrs.at(pin)));
  }
  json doc = {{"type", "state"},
              {"seq", snap.version},
              {"mode", model::ModeName(snap.state.mode)},
              {"inputs", inputs},
              {"outputs", outputs},
              {"status", model::SessionStatusName(snap.status)}};
  if (!snap.status_detail.empty()) doc["status_detail"] = snap.status_detail;
  if (snap.internals) {
    json nodes = json::object();
    for (const auto& [name, level] : snap.internals->ports) {
      nodes[name] = Bit(level);
    }
    doc["internals"] = nodes;
  }
  doc["counters"] = {{"frames_sent", snap.frames_sent},
                     {"frames_received", snap.frames_received},
                     {"reply_timeouts", snap.reply_timeouts},
                     {"protocol_errors", snap.protocol_errors},
                     {"faults", snap.faults}};
  json log = json::array();
  for (const auto& entry : snap.recent_log) {
    log.push_back({{"at_ms", entry.at.count()},
                   {"kind", model::LogKindName(entry.kind)},
                   {"detail", entry.detail}});
  }
  doc["log"] = log;
  return doc.dump();
}

std::string ErrorMessage(std::string_view detail) {
  return json{{"type", "error"}, {"detail", detail}}.dump();
}

std::string SweepMessage(model::Mode mode, const verify::TruthTable& table,
                         const std::optional<verify::Comparison>& comparison) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"inputs", row.inputs.ToString()},
                    {"outputs", row.outputs.ToString()},
                    {"failed", row.failed}});
  }
  json doc = {{"type", "sweep"},
              {"mode", model::ModeName(mode)},
              {"rows", rows},
              {"failed_rows", table.failed_rows()}};
  if (comparison) {
    doc["is_zero"] = comparison->is_zero;
    doc["nonzero_cells"] = comparison->nonzero_cells;
    json cells = json::array();
    for (const auto& diff : comparison->diffs) {
      for (const auto& v : diff.NonzeroCells()) {
        cells.push_back({{"output_pin", diff.output_pin},
                         {"inputs", v.ToString()},
                         {"difference", diff.at(v)}});
      }
    }
    doc["diff"] = cells;
  }
  return doc.dump();
}

class WsSession;

class PanelCore : public std::enable_shared_from_this<PanelCore> {
 public:
  PanelCore(model::ModelServer& server, transport::Clock& clock,
            PanelOptions options)
      : server_(server), clock_(clock), options_(std::move(options)),
        acceptor_(ioc_) {
    const auto address = transport::StreamAddress::Parse(options_.bind);
    boost::system::error_code ec;
    const auto ip = asio::ip::make_address(
        address.host.empty() || address.host == "localhost" ? "127.0.0.1"
                                                            : address.host,
        ec);
    if (ec) {
      throw Error(ErrorCode::kBindFailure,
                  "bad panel address " + options_.bind + ": " + ec.message());
    }
    const tcp::endpoint endpoint(ip, address.port);
    acceptor_.open(endpoint.protocol(), ec);
    if (!ec) acceptor_.set_option(asio::socket_base::reuse_address(true), ec);
    if (!ec) acceptor_.bind(endpoint, ec);
    if (!ec) acceptor_.listen(asio::socket_base::max_listen_connections, ec);
    if (ec) {
      throw Error(ErrorCode::kBindFailure,
                  "cannot bind panel on " + options_.bind + ": " + ec.message());
    }
    host_ = ip.to_string();
  }

  void Start() {
    std::weak_ptr<PanelCore> weak = shared_from_this();
    server_.Subscribe([weak](const model::ModelSnapshot& snap) {
      if (auto self = weak.lock()) self->Broadcast(StateMessage(snap));
    });
    DoAccept();
    io_thread_ = std::thread([this] { ioc_.run(); });
    worker_ = std::thread([this] { WorkLoop(); });
  }

  void Stop() {
    {
      std::lock_guard lock(mu_);
      if (stopped_) return;
      stopped_ = true;
    }
    cv_.notify_all();
    if (worker_.joinable()) worker_.join();
    asio::post(ioc_, [this] {
      boost::system::error_code ec;
      acceptor_.close(ec);
      CloseSessions();
    });
    // Give the close frames a moment before tearing the loop down.
    std::this_thread::sleep_for(std::chrono::milliseconds(20));
    ioc_.stop();
    if (io_thread_.joinable()) io_thread_.join();
  }

  void Wait() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [this] { return stopped_; });
  }

  std::uint16_t port() const { return acceptor_port_(); }
  std::string url() const {
    return "http://" + host_ + ":" + std::to_string(port()) + "/";
  }
  std::size_t client_count() const {
    std::lock_guard lock(mu_);
    return client_count_;
  }

  const PanelOptions& options() const { return options_; }
  asio::io_context& ioc() { return ioc_; }

  void Register(const std::shared_ptr<WsSession>& session);
  void Unregister(const WsSession* session);
  void Enqueue(std::weak_ptr<WsSession> client, PanelCommand cmd) {
    {
      std::lock_guard lock(mu_);
      if (stopped_) return;
      queue_.push_back({std::move(client), cmd});
    }
    cv_.notify_all();
  }

  std::string CurrentState() const { return StateMessage(server_.snapshot()); }

 private:
  struct Pending {
    std::weak_ptr<WsSession> client;
    PanelCommand cmd;
  };

  std::uint16_t acceptor_port_() const {
    boost::system::error_code ec;
    auto ep = acceptor_.local_endpoint(ec);
    return ec ? 0 : ep.port();
  }

  void DoAccept();
  void Broadcast(std::string message);
  void CloseSessions();
  void Reply(const std::weak_ptr<WsSession>& client, std::string message);

  void WorkLoop() {
    for (;;) {
      Pending next;
      {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [this] { return stopped_ || !queue_.empty(); });
        if (stopped_) return;
        next = std::move(queue_.front());
        queue_.pop_front();
      }
      try {
        Execute(next);
      } catch (const std::exception& e) {
        Reply(next.client, ErrorMessage(e.what()));
      }
    }
  }

  void Execute(const Pending& p) {
    const PanelCommand& cmd = p.cmd;
    switch (cmd.kind) {
      case PanelCommand::Kind::kSetPin:
        server_.Handle(model::HarnessEvent::Pin(cmd.pin, cmd.level));
        return;
      case PanelCommand::Kind::kSetMode:
        if (cmd.mode == model::Mode::kMrm && !options_.mrm_available) {
          Reply(p.client, ErrorMessage("MRM unavailable: no board attached"));
          return;
        }
        server_.Handle(model::HarnessEvent::SetMode(cmd.mode));
        return;
      case PanelCommand::Kind::kRequestSnapshot:
        Reply(p.client, CurrentState());
        return;
      case PanelCommand::Kind::kRunSweep:
        RunSweep(p);
        return;
    }
  }

  void RunSweep(const Pending& p) {
    if (p.cmd.mode == model::Mode::kMom) {
      verify::TruthTable table = verify::MomSweep(server_, clock_);
      Broadcast(SweepMessage(model::Mode::kMom, table, std::nullopt));
      return;
    }
    if (!options_.mrm_available) {
      Reply(p.client, ErrorMessage("MRM unavailable: no board attached"));
      return;
    }
    verify::MrmSession session{server_, clock_, options_.board_poll_period,
                               options_.latency, Millis{50},
                               options_.board_inputs};
    verify::MrmSweepResult result = verify::MrmSweep(session);
    std::optional<verify::Comparison> comparison;
    if (result.table.complete()) {
      comparison = verify::Compare(verify::MomSweep(server_.netlist()),
                                   result.table);
    }
    Broadcast(SweepMessage(model::Mode::kMrm, result.table, comparison));
  }

  model::ModelServer& server_;
  transport::Clock& clock_;
  const PanelOptions options_;
  std::string host_;

  asio::io_context ioc_;
  tcp::acceptor acceptor_;
  std::thread io_thread_;
  std::thread worker_;

  mutable std::mutex mu_;
  std::condition_variable cv_;
  bool stopped_ = false;
  std::deque<Pending> queue_;
  std::size_t client_count_ = 0;

  // Touched only on the io thread.
  std::vector<std::weak_ptr<WsSession>> sessions_;
};

class WsSession : public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket socket, std::weak_ptr<PanelCore> owner)
      : ws_(std::move(socket)), owner_(std::move(owner)) {}

  void Accept(http::request<http::string_body> req) {
    ws_.set_option(
        websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(req, [self = shared_from_this()](beast::error_code ec) {
      if (ec) return;
      auto owner = self->owner_.lock();
      if (!owner) return;
      owner->Register(self);
      self->Send(owner->CurrentState());
      self->DoRead();
    });
  }

  void Send(std::string message) {
    outbox_.push_back(std::move(message));
    if (outbox_.size() == 1) DoWrite();
  }

  void Close() {
    closing_ = true;
    ws_.async_close(websocket::close_code::going_away,
                    [self = shared_from_this()](beast::error_code) {});
  }

 private:
  void DoRead() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec,
                                                        std::size_t) {
      if (ec) {
        self->Finish();
        return;
      }
      std::string text = beast::buffers_to_string(self->buffer_.data());
      self->buffer_.consume(self->buffer_.size());
      if (auto owner = self->owner_.lock()) {
        try {
          owner->Enqueue(self, ParsePanelCommand(text));
        } catch (const Error& e) {
          self->Send(ErrorMessage(e.what()));
        }
      }
      self->DoRead();
    });
  }

  void DoWrite() {
    if (closing_) return;
    ws_.text(true);
    ws_.async_write(asio::buffer(outbox_.front()),
                    [self = shared_from_this()](beast::error_code ec,
                                                std::size_t) {
                      if (ec) {
                        self->outbox_.clear();
                        return;
                      }
                      self->outbox_.pop_front();
                      if (!self->outbox_.empty()) self->DoWrite();
                    });
  }

  void Finish() {
    if (auto owner = owner_.lock()) owner->Unregister(this);
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  std::deque<std::string> outbox_;
  std::weak_ptr<PanelCore> owner_;
  bool closing_ = false;
};

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket socket, std::weak_ptr<PanelCore> owner)
      : stream_(std::move(socket)), owner_(std::move(owner)) {}

  void Run() { DoRead(); }

 private:
  void DoRead() {
    req_ = {};
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, req_,
                     [self = shared_from_this()](beast::error_code ec,
                                                 std::size_t) {
                       if (ec) return;
                       self->OnRequest();
                     });
  }

  void OnRequest() {
    auto owner = owner_.lock();
    if (!owner) return;
    if (websocket::is_upgrade(req_)) {
      stream_.expires_never();
      std::make_shared<WsSession>(stream_.release_socket(), owner_)
          ->Accept(std::move(req_));
      return;
    }
    auto res = std::make_shared<http::response<http::string_body>>(
        BuildResponse(owner->options()));
    http::async_write(stream_, *res,
                      [self = shared_from_this(), res](beast::error_code ec,
                                                       std::size_t) {
                        if (ec) return;
                        if (res->need_eof()) {
                          beast::error_code ignored;
                          self->stream_.socket().shutdown(
                              tcp::socket::shutdown_send, ignored);
                          return;
                        }
                        self->DoRead();
                      });
  }

  http::response<http::string_body> BuildResponse(const PanelOptions& options) {
    http::response<http::string_body> res;
    res.version(req_.version());
    res.keep_alive(req_.keep_alive());
    res.set(http::field::server, "shia-panel");
    if (req_.method() != http::verb::get && req_.method() != http::verb::head) {
      res.result(http::status::method_not_allowed);
      res.set(http::field::content_type, "text/plain");
      res.body() = "method not allowed\n";
    } else if (auto file = options.static_dir
                               ? ResolveAsset(*options.static_dir, Target())
                               : std::nullopt) {
      std::ifstream in(*file, std::ios::binary);
      std::ostringstream body;
      body << in.rdbuf();
      res.result(http::status::ok);
      res.set(http::field::content_type, std::string(ContentType(*file)));
      res.body() = body.str();
    } else if (Target() == "/" || Target() == "/index.html") {
      res.result(http::status::ok);
      res.set(http::field::content_type, "text/html; charset=utf-8");
      res.body() = std::string(FallbackPage());
    } else {
      res.result(http::status::not_found);
      res.set(http::field::content_type, "text/plain");
      res.body() = "not found\n";
    }
    res.prepare_payload();
    if (req_.method() == http::verb::head) res.body().clear();
    return res;
  }

  std::string_view Target() const {
    return {req_.target().data(), req_.target().size()};
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> req_;
  std::weak_ptr<PanelCore> owner_;
};

void PanelCore::DoAccept() {
  acceptor_.async_accept([weak = weak_from_this()](beast::error_code ec,
                                                   tcp::socket socket) {
    auto self = weak.lock();
    if (!self || ec == asio::error::operation_aborted) return;
    if (!ec) std::make_shared<HttpSession>(std::move(socket), weak)->Run();
    if (self->acceptor_.is_open()) self->DoAccept();
  });
}

void PanelCore::Register(const std::shared_ptr<WsSession>& session) {
  sessions_.push_back(session);
  std::lock_guard lock(mu_);
  client_count_ = sessions_.size();
}

void PanelCore::Unregister(const WsSession* session) {
  std::erase_if(sessions_, [session](const std::weak_ptr<WsSession>& w) {
    auto s = w.lock();
    return !s || s.get() == session;
  });
  std::lock_guard lock(mu_);
  client_count_ = sessions_.size();
}

void PanelCore::Broadcast(std::string message) {
  asio::post(ioc_, [weak = weak_from_this(), message = std::move(message)] {
    auto self = weak.lock();
    if (!self) return;
    for (const auto& w : self->sessions_) {
      if (auto s = w.lock()) s->Send(message);
    }
  });
}

void PanelCore::Reply(const std::weak_ptr<WsSession>& client,
                               std::string message) {
  asio::post(ioc_, [client, message = std::move(message)] {
    if (auto s = client.lock()) s->Send(message);
  });
}

void PanelCore::CloseSessions() {
  for (const auto& w : sessions_) {
    if (auto s = w.lock()) s->Close();
  }
  sessions_.clear();
  std::lock_guard lock(mu_);
  client_count_ = 0;
}

PanelService::PanelService(model::ModelServer& server, transport::Clock& clock,
                           PanelOptions options)
    : impl_(std::make_shared<PanelCore>(server, clock, std::move(options))) {
  impl_->Start();
}

PanelService::~PanelService() { impl_->Stop(); }

std::uint16_t PanelService::port() const { return impl_->port(); }
std::string PanelService::url() const { return impl_->url(); }
std::size_t PanelService::client_count() const { return impl_->client_count(); }
void PanelService::Stop() { impl_->Stop(); }
void PanelService::Wait() { impl_->Wait(); }

std::string_view FallbackPage() {
  return R"HTML(<!doctype html>
<html>
<head>
<meta charset="utf-8">
<title>SHIA panel</title>
<style>
body { font-family: sans-serif; margin: 2em; }
.lamp { display: inline-block; width: 1.4em; height: 1.4em; border-radius: 50%;
        background: #444; margin: 0 .3em; vertical-align: middle; }
.lamp.on { background: #f5c400; }
button.on { background: #2a7; color: #fff; }
#status { color: #666; }
</style>
</head>
<body>
<h1>SHIA test harness</h1>
<p>Mode: <select id="mode"><option>MOM</option><option>MRM</option></select>
<span id="status">connecting</span></p>
<p>Inputs: <span id="inputs"></span></p>
<p>Outputs: <span id="outputs"></span></p>
<pre id="log"></pre>
<script>
let seq = -1, ws;
const inputs = document.getElementById('inputs');
const outputs = document.getElementById('outputs');
for (let i = 1; i <= 5; i++) {
  const b = document.createElement('button');
  b.textContent = 'in' + i;
  b.onclick = () => ws.send(JSON.stringify(
      {type: 'set_pin', pin: i, level: b.classList.contains('on') ? 0 : 1}));
  inputs.appendChild(b);
  const l = document.createElement('span');
  l.className = 'lamp';
  l.title = 'out' + i;
  outputs.appendChild(l);
}
document.getElementById('mode').onchange = (e) =>
  ws.send(JSON.stringify({type: 'set_mode', mode: e.target.value}));
function connect() {
  ws = new WebSocket('ws://' + location.host + '/ws');
  ws.onmessage = (e) => {
    const m = JSON.parse(e.data);
    if (m.type === 'error') {
      document.getElementById('status').textContent = 'error: ' + m.detail;
      return;
    }
    if (m.type !== 'state' || m.seq < seq) return;
    seq = m.seq;
    document.getElementById('mode').value = m.mode;
    document.getElementById('status').textContent = m.status;
    m.inputs.forEach((v, i) => inputs.children[i].classList.toggle('on', v === 1));
    m.outputs.forEach((v, i) => outputs.children[i].classList.toggle('on', v === 1));
    document.getElementById('log').textContent =
      m.log.map((x) => x.at_ms + ' ' + x.kind + ' ' + x.detail).join('\n');
  };
  ws.onclose = () => {
    document.getElementById('status').textContent = 'disconnected';
    setTimeout(connect, 1000);
  };
}
connect();
</script>
</body>
</html>
)HTML";
}

}  // namespace shia::panel

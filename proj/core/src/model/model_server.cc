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

#include "shia/model/model_server.h"

#include <algorithm>
#include <deque>
#include <mutex>

#include "shia/error.h"

namespace shia::model {

std::string_view SessionStatusName(SessionStatus status) {
  switch (status) {
    case SessionStatus::kOffline: return "offline";
    case SessionStatus::kReady: return "ready";
    case SessionStatus::kAwaitingReply: return "awaiting-reply";
    case SessionStatus::kReplyTimeout: return "reply-timeout";
    case SessionStatus::kFault: return "session-fault";
  }
  return "?";
}

std::string_view LogKindName(ModelLogEntry::Kind kind) {
  switch (kind) {
    case ModelLogEntry::Kind::kMode: return "mode";
    case ModelLogEntry::Kind::kPanel: return "panel";
    case ModelLogEntry::Kind::kTransmit: return "tx";
    case ModelLogEntry::Kind::kReceiveRead: return "rx-read";
    case ModelLogEntry::Kind::kResponse: return "rx";
    case ModelLogEntry::Kind::kProtocolError: return "protocol-error";
    case ModelLogEntry::Kind::kReplyTimeout: return "reply-timeout";
    case ModelLogEntry::Kind::kSessionFault: return "session-fault";
  }
  return "?";
}

namespace {

bool SameView(const ModelSnapshot& a, const ModelSnapshot& b) {
  return a.state == b.state && a.internals == b.internals &&
         a.status == b.status && a.status_detail == b.status_detail &&
         a.frames_sent == b.frames_sent &&
         a.frames_received == b.frames_received &&
         a.reply_timeouts == b.reply_timeouts &&
         a.protocol_errors == b.protocol_errors && a.faults == b.faults &&
         a.board_heard == b.board_heard;
}

}  // namespace

class ModelServer::Core : public std::enable_shared_from_this<Core> {
 public:
  Core(logic::Netlist net, transport::Clock& clock, ModelConfig config)
      : clock_(clock), config_(std::move(config)), sim_(std::move(net)) {
    if (config_.delay < Millis{0} ||
        config_.effective_reply_timeout() < Millis{0} ||
        config_.rx_poll <= Millis{0}) {
      throw Error(ErrorCode::kConfig, "model timing values must be positive");
    }
    state_.output_attrs = sim_.Current().outputs;
    published_ = MakeSnapshot();
  }

  void Attach(transport::Endpoint endpoint) {
    std::lock_guard lock(mu_);
    reader_ = std::make_unique<transport::FrameReader>(endpoint.rx);
    endpoint_ = std::move(endpoint);
    if (state_.mode == Mode::kMrm) state_.tx_state = TxState::kInitialise;
    Publish();
  }

  void Handle(const HarnessEvent& ev) {
    std::lock_guard lock(mu_);
    state_.listen_state = ListenState::kMonitor;
    PanelStep step = HandlePanelEvent(state_, ev);
    state_ = std::move(step.state);
    Log(ev.kind == HarnessEvent::Kind::kSetMode ? ModelLogEntry::Kind::kMode
                                                : ModelLogEntry::Kind::kPanel,
        Describe(ev));
    for (const Effect& effect : step.effects) Apply(effect);
    state_.listen_state = ListenState::kIdle;
    Publish();
  }

  ModelSnapshot Snapshot() const {
    std::lock_guard lock(mu_);
    ModelSnapshot snap = MakeSnapshot();
    snap.version = version_;
    return snap;
  }

  std::vector<ModelLogEntry> Log() const {
    std::lock_guard lock(mu_);
    return log_;
  }

  const ModelConfig& config() const { return config_; }
  const logic::Netlist& netlist() const { return sim_.netlist(); }

  void Subscribe(Observer observer) {
    std::lock_guard lock(mu_);
    observers_.push_back(std::move(observer));
  }

  void Shutdown() {
    std::lock_guard lock(mu_);
    CancelRxTimer();
  }

 private:
  static std::string Describe(const HarnessEvent& ev) {
    switch (ev.kind) {
      case HarnessEvent::Kind::kPinHigh:
        return "ev_Test_Pin" + std::to_string(ev.pin) + "High";
      case HarnessEvent::Kind::kPinLow:
        return "ev_Test_Pin" + std::to_string(ev.pin) + "Low";
      case HarnessEvent::Kind::kSetMode:
        return "set_mode " + std::string(ModeName(ev.mode));
      case HarnessEvent::Kind::kUpdateOutgoing:
        return "ev_UpdateOutgoing";
      case HarnessEvent::Kind::kWaitForReply:
        return "ev_WaitForReply";
    }
    return "?";
  }

  void Log(ModelLogEntry::Kind kind, std::string detail) {
    log_.push_back({clock_.now(), kind, std::move(detail)});
  }

  void Apply(const Effect& effect) {
    switch (effect.kind) {
      case Effect::Kind::kStimulateModel:
        state_.output_attrs = sim_.Settle(state_.input_attrs).outputs;
        break;
      case Effect::Kind::kEnterMrm:
        faulted_ = false;
        fault_detail_.clear();
        last_timeout_ = false;
        board_heard_ = false;
        state_.tx_state = TxState::kInitialise;
        state_.rx_state = RxState::kIdle;
        InitialiseTransmit();
        break;
      case Effect::Kind::kEnterMom:
        CancelRxTimer();
        state_.tx_state = TxState::kInitialise;
        state_.rx_state = RxState::kInitialise;
        faulted_ = false;
        fault_detail_.clear();
        last_timeout_ = false;
        state_.output_attrs = sim_.Settle(state_.input_attrs).outputs;
        break;
      case Effect::Kind::kRaise:
        queue_.push_back(effect.event);
        DrainQueue();
        break;
    }
  }

  void DrainQueue() {
    while (!queue_.empty()) {
      HarnessEvent ev = queue_.front();
      queue_.pop_front();
      if (state_.mode != Mode::kMrm) continue;
      if (ev.kind == HarnessEvent::Kind::kUpdateOutgoing) {
        Transmit(*ev.frame);
      } else if (ev.kind == HarnessEvent::Kind::kWaitForReply) {
        WaitForReply();
      }
    }
  }

  // Transmit region, Initialise: line settings must mirror the peer.
  void InitialiseTransmit() {
    if (!endpoint_) {
      Fault("no transport attached");
      return;
    }
    if (endpoint_->peer_config && *endpoint_->peer_config != config_.serial) {
      Fault("serial configuration mismatch: local " + config_.serial.ToString() +
            ", peer " + endpoint_->peer_config->ToString());
      return;
    }
    if (endpoint_->tx->closed()) {
      Fault("transport closed");
      return;
    }
    faulted_ = false;
    fault_detail_.clear();
    state_.tx_state = TxState::kWaitForChange;
  }

  void Transmit(const protocol::Frame& frame) {
    state_.outgoing_message = frame;
    if (state_.tx_state == TxState::kInitialise) InitialiseTransmit();
    if (state_.tx_state != TxState::kWaitForChange) {
      state_.outgoing_message.reset();
      return;
    }
    state_.tx_state = TxState::kSendChanges;
    try {
      endpoint_->tx->Write(frame.view());
    } catch (const Error& e) {
      state_.outgoing_message.reset();
      state_.tx_state = TxState::kInitialise;
      Fault(std::string("transmit failed: ") + e.what());
      return;
    }
    ++frames_sent_;
    Log(ModelLogEntry::Kind::kTransmit, frame.str());
    state_.outgoing_message.reset();
    queue_.push_back(HarnessEvent::WaitForReply());
    state_.tx_state = TxState::kWaitForChange;
  }

  // Receive region. A WaitForReply that arrives while a delay is already
  // running restarts it, so every read happens at least `delay` after the
  // most recent transmission.
  void WaitForReply() {
    if (state_.rx_state == RxState::kInitialise) return;
    CancelRxTimer();
    last_timeout_ = false;
    state_.rx_state = RxState::kDelay;
    ScheduleRx(clock_.now() + config_.delay, &Core::OnDelayElapsed);
  }

  void OnDelayElapsed() {
    state_.rx_state = RxState::kReceiveChanges;
    const std::size_t n = ReadResponses();
    Log(ModelLogEntry::Kind::kReceiveRead, std::to_string(n));
    if (state_.rx_state != RxState::kReceiveChanges) return;  // faulted
    if (n > 0) {
      state_.rx_state = RxState::kIdle;
      return;
    }
    window_end_ = clock_.now() + config_.effective_reply_timeout();
    ContinueWindow();
  }

  void OnPoll() {
    const std::size_t n = ReadResponses();
    if (state_.rx_state != RxState::kReceiveChanges) return;
    if (n > 0) {
      Log(ModelLogEntry::Kind::kReceiveRead, std::to_string(n));
      state_.rx_state = RxState::kIdle;
      return;
    }
    ContinueWindow();
  }

  void ContinueWindow() {
    const Millis now = clock_.now();
    if (now >= window_end_) {
      ++reply_timeouts_;
      last_timeout_ = true;
      Log(ModelLogEntry::Kind::kReplyTimeout,
          "no reply within " +
              std::to_string((config_.delay +
                              config_.effective_reply_timeout()).count()) +
              " ms");
      state_.rx_state = RxState::kIdle;
      return;
    }
    ScheduleRx(std::min(now + config_.rx_poll, window_end_), &Core::OnPoll);
  }

  std::size_t ReadResponses() {
    if (!reader_) return 0;
    transport::FrameReader::Result result;
    try {
      result = reader_->Read();
    } catch (const Error& e) {
      state_.rx_state = RxState::kIdle;
      Fault(std::string("receive failed: ") + e.what());
      return 0;
    }
    std::size_t applied = 0;
    for (const auto& frame : result.frames) {
      try {
        const auto msg =
            protocol::DecodeAs(frame.view(), protocol::Direction::kResponse);
        state_.output_attrs.set(msg.pin, msg.level);
        ++frames_received_;
        ++applied;
        board_heard_ = true;
        Log(ModelLogEntry::Kind::kResponse, frame.str());
      } catch (const Error& e) {
        ++protocol_errors_;
        Log(ModelLogEntry::Kind::kProtocolError, e.what());
      }
    }
    if (result.closed) {
      state_.rx_state = RxState::kIdle;
      state_.tx_state = TxState::kInitialise;
      Fault("transport closed by peer");
    }
    return applied;
  }

  void ScheduleRx(Millis deadline, void (Core::*handler)()) {
    const std::uint64_t generation = ++rx_generation_;
    rx_timer_ = clock_.ScheduleAt(
        deadline, [weak = weak_from_this(), generation, handler] {
          auto self = weak.lock();
          if (!self) return;
          std::lock_guard lock(self->mu_);
          if (generation != self->rx_generation_ ||
              self->state_.mode != Mode::kMrm) {
            return;
          }
          self->rx_timer_.reset();
          (self.get()->*handler)();
          self->DrainQueue();
          self->Publish();
        });
  }

  void CancelRxTimer() {
    ++rx_generation_;
    if (rx_timer_) clock_.Cancel(*rx_timer_);
    rx_timer_.reset();
  }

  void Fault(std::string detail) {
    faulted_ = true;
    ++faults_;
    fault_detail_ = detail;
    Log(ModelLogEntry::Kind::kSessionFault, std::move(detail));
  }

  SessionStatus Status() const {
    if (state_.mode == Mode::kMom) return SessionStatus::kOffline;
    if (faulted_) return SessionStatus::kFault;
    if (state_.rx_state == RxState::kDelay ||
        state_.rx_state == RxState::kReceiveChanges) {
      return SessionStatus::kAwaitingReply;
    }
    if (last_timeout_) return SessionStatus::kReplyTimeout;
    return SessionStatus::kReady;
  }

  ModelSnapshot MakeSnapshot() const {
    ModelSnapshot snap;
    snap.state = state_;
    if (state_.mode == Mode::kMom) snap.internals = sim_.Current().nodes;
    snap.status = Status();
    snap.status_detail = faulted_ ? fault_detail_ : "";
    snap.frames_sent = frames_sent_;
    snap.frames_received = frames_received_;
    snap.reply_timeouts = reply_timeouts_;
    snap.protocol_errors = protocol_errors_;
    snap.faults = faults_;
    snap.board_heard = board_heard_;
    const std::size_t tail = std::min(log_.size(), kRecentLogSize);
    snap.recent_log.assign(log_.end() - static_cast<std::ptrdiff_t>(tail),
                           log_.end());
    return snap;
  }

  void Publish() {
    ModelSnapshot snap = MakeSnapshot();
    if (SameView(snap, published_)) return;
    snap.version = ++version_;
    published_ = snap;
    for (const auto& observer : observers_) observer(snap);
  }

  mutable std::mutex mu_;
  transport::Clock& clock_;
  const ModelConfig config_;
  logic::Simulator sim_;
  HarnessState state_;
  std::optional<transport::Endpoint> endpoint_;
  std::unique_ptr<transport::FrameReader> reader_;
  std::deque<HarnessEvent> queue_;

  std::optional<transport::Clock::TimerId> rx_timer_;
  std::uint64_t rx_generation_ = 0;
  Millis window_end_{0};

  bool faulted_ = false;
  std::string fault_detail_;
  bool last_timeout_ = false;
  bool board_heard_ = false;
  std::uint64_t frames_sent_ = 0;
  std::uint64_t frames_received_ = 0;
  std::uint64_t reply_timeouts_ = 0;
  std::uint64_t protocol_errors_ = 0;
  std::uint64_t faults_ = 0;

  std::vector<ModelLogEntry> log_;
  std::vector<Observer> observers_;
  std::uint64_t version_ = 0;
  ModelSnapshot published_;
};

ModelServer::ModelServer(logic::Netlist net, transport::Clock& clock,
                         ModelConfig config)
    : core_(std::make_shared<Core>(std::move(net), clock, std::move(config))) {}

ModelServer::~ModelServer() { core_->Shutdown(); }

void ModelServer::AttachEndpoint(transport::Endpoint endpoint) {
  core_->Attach(std::move(endpoint));
}

void ModelServer::Handle(const HarnessEvent& ev) { core_->Handle(ev); }

ModelSnapshot ModelServer::snapshot() const { return core_->Snapshot(); }

std::vector<ModelLogEntry> ModelServer::log() const { return core_->Log(); }

const ModelConfig& ModelServer::config() const { return core_->config(); }

const logic::Netlist& ModelServer::netlist() const { return core_->netlist(); }

void ModelServer::Subscribe(Observer observer) {
  core_->Subscribe(std::move(observer));
}

}  // namespace shia::model

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

#include "shia/transport/stream.h"

#include <sys/socket.h>

#include <atomic>
#include <charconv>
#include <mutex>
#include <thread>

#include <boost/asio.hpp>

#include "shia/error.h"

namespace shia::transport {
namespace {

namespace asio = boost::asio;
using asio::ip::tcp;

// Socket plus a reader thread that drains it into a buffer, so reads from
// the protocol side never block.
class TcpConnection : public std::enable_shared_from_this<TcpConnection> {
 public:
  TcpConnection(std::unique_ptr<asio::io_context> io, tcp::socket socket)
      : io_(std::move(io)), socket_(std::move(socket)) {}

  ~TcpConnection() {
    Shutdown();
    if (reader_.joinable()) reader_.join();
  }

  void StartReader() {
    reader_ = std::thread([this] {
      std::array<char, 512> chunk{};
      for (;;) {
        boost::system::error_code ec;
        const std::size_t n = socket_.read_some(asio::buffer(chunk), ec);
        std::lock_guard lock(mu_);
        if (ec) {
          eof_ = true;
          return;
        }
        buffer_.append(chunk.data(), n);
      }
    });
  }

  void Write(std::string_view bytes) {
    std::lock_guard lock(write_mu_);
    if (write_closed_ || eof_seen()) {
      throw Error(ErrorCode::kStreamClosed, "write on closed stream");
    }
    boost::system::error_code ec;
    asio::write(socket_, asio::buffer(bytes.data(), bytes.size()), ec);
    if (ec) {
      write_closed_ = true;
      throw Error(ErrorCode::kStreamClosed, "stream write failed: " + ec.message());
    }
  }

  void CloseWrite() {
    std::lock_guard lock(write_mu_);
    if (write_closed_) return;
    write_closed_ = true;
    ::shutdown(socket_.native_handle(), SHUT_WR);
  }

  bool write_closed() const {
    std::lock_guard lock(write_mu_);
    return write_closed_;
  }

  ReadResult Read() {
    std::lock_guard lock(mu_);
    ReadResult result;
    result.bytes.swap(buffer_);
    result.closed = eof_;
    return result;
  }

  void Shutdown() {
    if (!shut_.exchange(true)) {
      ::shutdown(socket_.native_handle(), SHUT_RDWR);
    }
  }

 private:
  bool eof_seen() {
    std::lock_guard lock(mu_);
    return eof_;
  }

  std::unique_ptr<asio::io_context> io_;
  tcp::socket socket_;
  std::thread reader_;
  std::mutex mu_;
  std::string buffer_;
  bool eof_ = false;
  mutable std::mutex write_mu_;
  bool write_closed_ = false;
  std::atomic<bool> shut_{false};
};

class TcpSink final : public ByteSink {
 public:
  explicit TcpSink(std::shared_ptr<TcpConnection> conn) : conn_(std::move(conn)) {}
  void Write(std::string_view bytes) override { conn_->Write(bytes); }
  void Close() override { conn_->CloseWrite(); }
  bool closed() const override { return conn_->write_closed(); }

 private:
  std::shared_ptr<TcpConnection> conn_;
};

class TcpSource final : public ByteSource {
 public:
  explicit TcpSource(std::shared_ptr<TcpConnection> conn) : conn_(std::move(conn)) {}
  ReadResult ReadAvailable() override { return conn_->Read(); }
  void Close() override { conn_->Shutdown(); }

 private:
  std::shared_ptr<TcpConnection> conn_;
};

Endpoint MakeEndpoint(std::unique_ptr<asio::io_context> io, tcp::socket socket,
                      const SerialConfig& config, std::string description) {
  socket.set_option(tcp::no_delay(true));
  auto conn = std::make_shared<TcpConnection>(std::move(io), std::move(socket));
  conn->StartReader();
  Endpoint ep;
  ep.tx = std::make_shared<TcpSink>(conn);
  ep.rx = std::make_shared<TcpSource>(conn);
  ep.config = config;
  ep.description = std::move(description);
  return ep;
}

}  // namespace

StreamAddress StreamAddress::Parse(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon + 1 == text.size()) {
    throw Error(ErrorCode::kConfig,
                "stream address must be host:port, got '" + text + "'");
  }
  StreamAddress addr;
  addr.host = text.substr(0, colon);
  unsigned value = 0;
  const char* first = text.data() + colon + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value > 65535) {
    throw Error(ErrorCode::kConfig, "bad port in stream address '" + text + "'");
  }
  addr.port = static_cast<std::uint16_t>(value);
  return addr;
}

Endpoint ConnectStream(const std::string& address, const SerialConfig& config) {
  StreamAddress addr = StreamAddress::Parse(address);
  if (addr.host.empty()) addr.host = "127.0.0.1";
  auto io = std::make_unique<asio::io_context>();
  tcp::resolver resolver(*io);
  boost::system::error_code ec;
  auto results = resolver.resolve(addr.host, std::to_string(addr.port), ec);
  if (ec) {
    throw Error(ErrorCode::kConnectionRefused,
                "cannot resolve " + addr.ToString() + ": " + ec.message());
  }
  tcp::socket socket(*io);
  asio::connect(socket, results, ec);
  if (ec) {
    throw Error(ErrorCode::kConnectionRefused,
                "connect to " + addr.ToString() + " failed: " + ec.message());
  }
  return MakeEndpoint(std::move(io), std::move(socket), config,
                      "tcp:" + addr.ToString());
}

struct StreamListener::Impl {
  asio::io_context io;
  tcp::acceptor acceptor{io};
  SerialConfig config;
  std::atomic<bool> closed{false};
};

StreamListener::StreamListener(const std::string& address,
                               const SerialConfig& config)
    : impl_(std::make_unique<Impl>()) {
  StreamAddress addr = StreamAddress::Parse(address);
  impl_->config = config;
  boost::system::error_code ec;
  auto ip = addr.host.empty() ? asio::ip::address_v4::any()
                              : asio::ip::make_address(addr.host, ec);
  if (ec) {
    throw Error(ErrorCode::kBindFailure, "bad listen host '" + addr.host + "'");
  }
  tcp::endpoint ep(ip, addr.port);
  impl_->acceptor.open(ep.protocol(), ec);
  if (!ec) impl_->acceptor.set_option(tcp::acceptor::reuse_address(true), ec);
  if (!ec) impl_->acceptor.bind(ep, ec);
  if (!ec) impl_->acceptor.listen(asio::socket_base::max_listen_connections, ec);
  if (ec) {
    throw Error(ErrorCode::kBindFailure,
                "cannot listen on " + address + ": " + ec.message());
  }
}

StreamListener::~StreamListener() { Close(); }

Endpoint StreamListener::Accept() {
  auto io = std::make_unique<asio::io_context>();
  tcp::socket socket(*io);
  boost::system::error_code ec;
  impl_->acceptor.accept(socket, ec);
  if (ec || impl_->closed) {
    throw Error(ErrorCode::kStreamClosed, "listener closed");
  }
  boost::system::error_code ignored;
  auto remote = socket.remote_endpoint(ignored);
  return MakeEndpoint(std::move(io), std::move(socket), impl_->config,
                      "tcp:" + remote.address().to_string() + ":" +
                          std::to_string(remote.port()));
}

void StreamListener::Close() {
  if (impl_->closed.exchange(true)) return;
  ::shutdown(impl_->acceptor.native_handle(), SHUT_RDWR);
  boost::system::error_code ignored;
  impl_->acceptor.close(ignored);
}

std::uint16_t StreamListener::port() const {
  boost::system::error_code ec;
  return impl_->acceptor.local_endpoint(ec).port();
}

Endpoint ListenStream(const std::string& address, const SerialConfig& config) {
  StreamListener listener(address, config);
  return listener.Accept();
}

}  // namespace shia::transport

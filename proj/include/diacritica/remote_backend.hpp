//
// Copyright 2026 The Diacritica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Client for the restoration bridge protocol.
//
// Newline-delimited UTF-8 messages over a TCP stream:
//
//   request   R<TAB>seq_id<TAB>text
//   response  A<TAB>seq_id<TAB>text
//   error     E<TAB>seq_id<TAB>code<TAB>message
//
// seq_id is a decimal 64-bit counter chosen by the client. The server sends
// exactly one response per request, possibly out of order.

#ifndef DIACRITICA_REMOTE_BACKEND_HPP_
#define DIACRITICA_REMOTE_BACKEND_HPP_

#include <netdb.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>

#include "diacritica/error.hpp"
#include "diacritica/restore.hpp"

namespace diacritica {

namespace wire {

enum class MessageType { kRequest, kAnswer, kError };

struct Message {
  MessageType type;
  std::uint64_t seq_id = 0;
  std::string text;     // request/answer text or error message
  std::string code;     // error code, `E` only

  friend bool operator==(const Message&, const Message&) = default;
};

inline void check_payload(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) {
    throw ProtocolError("message text must not contain a newline");
  }
}

inline std::string encode(const Message& m) {
  check_payload(m.text);
  std::string out;
  switch (m.type) {
    case MessageType::kRequest: out = "R\t"; break;
    case MessageType::kAnswer: out = "A\t"; break;
    case MessageType::kError:
      if (m.code.find_first_of("\t\n") != std::string::npos) {
        throw ProtocolError("error code must not contain TAB or newline");
      }
      out = "E\t";
      break;
  }
  out += std::to_string(m.seq_id);
  out.push_back('\t');
  if (m.type == MessageType::kError) {
    out += m.code;
    out.push_back('\t');
  }
  out += m.text;
  out.push_back('\n');
  return out;
}

// Parses one message without its trailing newline.
inline Message decode(std::string_view line) {
  if (line.size() < 4 || line[1] != '\t') throw ProtocolError("malformed message");
  Message m;
  switch (line[0]) {
    case 'R': m.type = MessageType::kRequest; break;
    case 'A': m.type = MessageType::kAnswer; break;
    case 'E': m.type = MessageType::kError; break;
    default: throw ProtocolError("unknown message type");
  }
  const auto tab = line.find('\t', 2);
  if (tab == std::string_view::npos || tab == 2) throw ProtocolError("missing seq_id");
  const auto [p, ec] = std::from_chars(line.data() + 2, line.data() + tab, m.seq_id);
  if (ec != std::errc() || p != line.data() + tab) throw ProtocolError("malformed seq_id");
  std::string_view rest = line.substr(tab + 1);
  if (m.type == MessageType::kError) {
    const auto sep = rest.find('\t');
    if (sep == std::string_view::npos) throw ProtocolError("error message without code");
    m.code = std::string(rest.substr(0, sep));
    rest = rest.substr(sep + 1);
  }
  m.text = std::string(rest);
  return m;
}

}  // namespace wire

struct RemoteOptions {
  std::chrono::milliseconds timeout{30000};
};

struct Endpoint {
  std::string host;
  std::uint16_t port = 0;

  // "host:port"
  static Endpoint parse(std::string_view spec) {
    const auto colon = spec.rfind(':');
    if (colon == std::string_view::npos || colon == 0) {
      throw UsageError("endpoint must be host:port, got '" + std::string(spec) + "'");
    }
    unsigned port = 0;
    const auto digits = spec.substr(colon + 1);
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
    if (ec != std::errc() || p != digits.data() + digits.size() || port == 0 || port > 65535) {
      throw UsageError("invalid port in endpoint '" + std::string(spec) + "'");
    }
    return {std::string(spec.substr(0, colon)), static_cast<std::uint16_t>(port)};
  }

  std::string to_string() const { return host + ":" + std::to_string(port); }
};

namespace detail {

// One socket with a reader thread that routes responses to waiting callers
// by seq_id.
class BridgeConnection {
 public:
  explicit BridgeConnection(const Endpoint& endpoint) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    const std::string port = std::to_string(endpoint.port);
    if (const int rc = ::getaddrinfo(endpoint.host.c_str(), port.c_str(), &hints, &res); rc != 0) {
      throw ConnectionError("cannot resolve " + endpoint.to_string() + ": " + ::gai_strerror(rc));
    }
    int last_errno = 0;
    for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
      fd_ = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
      if (fd_ < 0) {
        last_errno = errno;
        continue;
      }
      if (::connect(fd_, ai->ai_addr, ai->ai_addrlen) == 0) break;
      last_errno = errno;
      ::close(fd_);
      fd_ = -1;
    }
    ::freeaddrinfo(res);
    if (fd_ < 0) {
      throw ConnectionError("cannot connect to " + endpoint.to_string() + ": " +
                            std::strerror(last_errno));
    }
    reader_ = std::thread([this] { read_loop(); });
  }

  BridgeConnection(const BridgeConnection&) = delete;
  BridgeConnection& operator=(const BridgeConnection&) = delete;

  ~BridgeConnection() {
    ::shutdown(fd_, SHUT_RDWR);
    if (reader_.joinable()) reader_.join();
    ::close(fd_);
  }

  bool broken() const {
    std::lock_guard lock(mu_);
    return static_cast<bool>(failure_);
  }

  // Set once the server violated the protocol; such a server is not retried.
  std::exception_ptr protocol_failure() const {
    std::lock_guard lock(mu_);
    return protocol_failure_;
  }

  std::string request(std::string_view text, std::chrono::milliseconds timeout) {
    wire::check_payload(text);
    std::future<std::string> reply;
    std::uint64_t seq = 0;
    {
      std::lock_guard lock(mu_);
      if (failure_) std::rethrow_exception(failure_);
      seq = next_seq_++;
      reply = pending_[seq].get_future();
    }
    const std::string message = wire::encode({wire::MessageType::kRequest, seq, std::string(text), {}});
    {
      std::lock_guard lock(write_mu_);
      std::size_t sent = 0;
      while (sent < message.size()) {
        const ssize_t n = ::send(fd_, message.data() + sent, message.size() - sent, MSG_NOSIGNAL);
        if (n < 0 && errno == EINTR) continue;
        if (n <= 0) {
          fail(std::make_exception_ptr(ConnectionError(std::string("send failed: ") + std::strerror(errno))));
          break;
        }
        sent += static_cast<std::size_t>(n);
      }
    }
    if (reply.wait_for(timeout) == std::future_status::timeout) {
      std::lock_guard lock(mu_);
      if (pending_.erase(seq) > 0) {
        abandoned_.insert(seq);
        throw TimeoutError("no response for request " + std::to_string(seq) + " within " +
                           std::to_string(timeout.count()) + " ms");
      }
    }
    return reply.get();
  }

 private:
  void read_loop() {
    std::string buffer;
    char chunk[1 << 14];
    while (true) {
      const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) {
        fail(std::make_exception_ptr(ConnectionError("connection closed by server")));
        return;
      }
      buffer.append(chunk, static_cast<std::size_t>(n));
      std::size_t start = 0;
      for (std::size_t eol; (eol = buffer.find('\n', start)) != std::string::npos; start = eol + 1) {
        if (!dispatch(std::string_view(buffer).substr(start, eol - start))) return;
      }
      buffer.erase(0, start);
    }
  }

  bool dispatch(std::string_view line) {
    wire::Message m;
    try {
      m = wire::decode(line);
      if (m.type == wire::MessageType::kRequest) throw ProtocolError("server sent a request");
    } catch (const ProtocolError&) {
      std::lock_guard lock(mu_);
      protocol_failure_ = std::current_exception();
      fail_locked(protocol_failure_);
      return false;
    }
    std::lock_guard lock(mu_);
    const auto it = pending_.find(m.seq_id);
    if (it == pending_.end()) {
      if (abandoned_.erase(m.seq_id) > 0) return true;
      protocol_failure_ = std::make_exception_ptr(
          ProtocolError("unexpected or duplicate response for seq_id " + std::to_string(m.seq_id)));
      fail_locked(protocol_failure_);
      return false;
    }
    if (m.type == wire::MessageType::kAnswer) {
      it->second.set_value(std::move(m.text));
    } else {
      it->second.set_exception(std::make_exception_ptr(RemoteError(m.code, m.text)));
    }
    pending_.erase(it);
    return true;
  }

  void fail(std::exception_ptr error) {
    std::lock_guard lock(mu_);
    fail_locked(std::move(error));
  }

  void fail_locked(std::exception_ptr error) {
    if (!failure_) failure_ = error;
    for (auto& [seq, promise] : pending_) promise.set_exception(failure_);
    pending_.clear();
  }

  int fd_ = -1;
  std::thread reader_;
  mutable std::mutex mu_;
  std::mutex write_mu_;
  std::map<std::uint64_t, std::promise<std::string>> pending_;
  std::set<std::uint64_t> abandoned_;
  std::uint64_t next_seq_ = 1;
  std::exception_ptr failure_;
  std::exception_ptr protocol_failure_;
};

}  // namespace detail

// Remote restorer. Thread-safe; concurrent callers share one connection and
// are multiplexed by seq_id. A dropped connection is replaced on the next
// call; after a protocol violation every call fails with ProtocolError.
class RemoteBackend final : public RestorationBackend {
 public:
  explicit RemoteBackend(Endpoint endpoint, RemoteOptions options = {})
      : endpoint_(std::move(endpoint)), options_(options) {}

  std::string restore_sentence(std::string_view line) override {
    return connection()->request(line, options_.timeout);
  }

  std::string name() const override { return "remote(" + endpoint_.to_string() + ")"; }

 private:
  std::shared_ptr<detail::BridgeConnection> connection() {
    std::lock_guard lock(mu_);
    if (conn_ && conn_->broken()) {
      if (auto violation = conn_->protocol_failure()) std::rethrow_exception(violation);
      conn_.reset();
    }
    if (!conn_) conn_ = std::make_shared<detail::BridgeConnection>(endpoint_);
    return conn_;
  }

  Endpoint endpoint_;
  RemoteOptions options_;
  std::mutex mu_;
  std::shared_ptr<detail::BridgeConnection> conn_;
};

}  // namespace diacritica

#endif  // DIACRITICA_REMOTE_BACKEND_HPP_

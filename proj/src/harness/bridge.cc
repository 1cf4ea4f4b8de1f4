// Copyright 2026 The perturbbench Authors
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

#include "perturbbench/harness/bridge.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>
#include <random>
#include <sstream>

#include <json.hpp>

#include "perturbbench/error.h"
#include "perturbbench/signal/noise.h"

namespace perturbbench {

using json = nlohmann::json;
constexpr const char* kHelloId = "__hello__";

std::string OracleTranscriber::transcribe(const TranscriptionRequest& request) {
  return request.reference;
}

std::string EmptyTranscriber::transcribe(const TranscriptionRequest&) {
  return "";
}

NoisyOracleTranscriber::NoisyOracleTranscriber(double drop_probability)
    : p_(drop_probability) {
  if (!(p_ >= 0.0 && p_ <= 1.0)) {
    throw ParameterError("noisy-oracle probability must be in [0, 1]");
  }
}

std::string NoisyOracleTranscriber::model_name() {
  std::ostringstream os;
  os << "noisy-oracle(" << p_ << ")";
  return os.str();
}

std::string NoisyOracleTranscriber::transcribe(
    const TranscriptionRequest& request) {
  std::mt19937_64 rng(stable_hash(request.id));
  std::bernoulli_distribution drop(p_);
  std::istringstream words(request.reference);
  std::string word, out;
  while (words >> word) {
    if (drop(rng)) continue;
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

SubprocessTranscriber::SubprocessTranscriber(std::string command,
                                             std::chrono::milliseconds timeout)
    : command_(std::move(command)), timeout_(timeout) {}

SubprocessTranscriber::~SubprocessTranscriber() { stop(); }

void SubprocessTranscriber::start() {
  int fds[2];
  if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
    throw BridgeError(std::string("socketpair: ") + std::strerror(errno));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(fds[0]);
    ::close(fds[1]);
    throw BridgeError(std::string("fork: ") + std::strerror(errno));
  }
  if (pid == 0) {
    // Child: only async-signal-safe calls until exec. The bridge gets its
    // own process group so that stop() also reaches anything the shell
    // spawned.
    ::setpgid(0, 0);
    ::dup2(fds[1], STDIN_FILENO);
    ::dup2(fds[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  ::close(fds[1]);
  pid_ = pid;
  fd_ = fds[0];
  pending_.clear();

  const std::string reply = exchange(kHelloId, json{{"id", kHelloId}}.dump());
  model_ = reply;
}

void SubprocessTranscriber::stop() {
  if (fd_ >= 0) {
    ::close(fd_);
    fd_ = -1;
  }
  if (pid_ > 0) {
    ::kill(-pid_, SIGKILL);
    ::kill(pid_, SIGKILL);
    ::waitpid(pid_, nullptr, 0);
    pid_ = -1;
  }
  pending_.clear();
}

void SubprocessTranscriber::fail(const std::string& what) {
  stop();
  throw BridgeError("bridge '" + command_ + "': " + what);
}

void SubprocessTranscriber::send_line(const std::string& line) {
  std::string data = line + "\n";
  std::size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t n =
        ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail(std::string("write failed: ") + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(n);
  }
}

std::string SubprocessTranscriber::read_line() {
  const auto deadline = std::chrono::steady_clock::now() + timeout_;
  for (;;) {
    if (const auto nl = pending_.find('\n'); nl != std::string::npos) {
      std::string line = pending_.substr(0, nl);
      pending_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) fail("timed out waiting for a reply");
    pollfd p{fd_, POLLIN, 0};
    const int ready = ::poll(&p, 1, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      fail(std::string("poll failed: ") + std::strerror(errno));
    }
    if (ready == 0) fail("timed out waiting for a reply");
    char buf[4096];
    const ssize_t n = ::read(fd_, buf, sizeof buf);
    if (n < 0) {
      if (errno == EINTR) continue;
      fail(std::string("read failed: ") + std::strerror(errno));
    }
    if (n == 0) fail("process exited");
    pending_.append(buf, static_cast<std::size_t>(n));
  }
}

std::string SubprocessTranscriber::exchange(const std::string& id,
                                            const std::string& request) {
  send_line(request);
  const std::string line = read_line();
  json reply;
  try {
    reply = json::parse(line);
  } catch (const json::exception&) {
    fail("malformed reply: " + line);
  }
  if (!reply.is_object() || !reply.contains("id") || reply["id"] != id) {
    fail("reply id mismatch for request '" + id + "': " + line);
  }
  if (reply.contains("error")) {
    const std::string msg =
        reply["error"].is_string() ? reply["error"].get<std::string>() : line;
    fail("error reply for '" + id + "': " + msg);
  }
  if (!reply.contains("text") || !reply["text"].is_string()) {
    fail("reply without text: " + line);
  }
  return reply["text"].get<std::string>();
}

std::string SubprocessTranscriber::model_name() {
  if (pid_ < 0) start();
  return model_;
}

std::string SubprocessTranscriber::transcribe(
    const TranscriptionRequest& request) {
  if (pid_ < 0) start();
  return exchange(request.id,
                  json{{"id", request.id}, {"wav", request.wav.string()}}.dump());
}

TranscriberFactory make_transcriber_factory(const std::string& bridge,
                                            std::chrono::milliseconds timeout) {
  if (bridge == "oracle") {
    return [] { return std::make_unique<OracleTranscriber>(); };
  }
  if (bridge == "empty") {
    return [] { return std::make_unique<EmptyTranscriber>(); };
  }
  const std::string prefix = "noisy-oracle(";
  if (bridge.rfind(prefix, 0) == 0) {
    if (bridge.back() != ')') {
      throw ParameterError("expected noisy-oracle(<p>), got '" + bridge + "'");
    }
    const std::string arg =
        bridge.substr(prefix.size(), bridge.size() - prefix.size() - 1);
    double p = 0.0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
    if (ec != std::errc() || ptr != arg.data() + arg.size()) {
      throw ParameterError("bad noisy-oracle probability '" + arg + "'");
    }
    NoisyOracleTranscriber probe(p);  // validates the range
    return [p] { return std::make_unique<NoisyOracleTranscriber>(p); };
  }
  if (bridge.empty()) throw ParameterError("empty bridge command");
  return [bridge, timeout] {
    return std::make_unique<SubprocessTranscriber>(bridge, timeout);
  };
}

}  // namespace perturbbench

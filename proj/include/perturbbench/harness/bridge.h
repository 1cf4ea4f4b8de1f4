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

#ifndef PERTURBBENCH_HARNESS_BRIDGE_H_
#define PERTURBBENCH_HARNESS_BRIDGE_H_

#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>

namespace perturbbench {

struct TranscriptionRequest {
  std::string id;
  std::filesystem::path wav;  // absolute
  // Ground truth, visible only to the built-in test bridges. Never sent over
  // the wire.
  std::string reference;
};

// Something that turns a WAV file into text. Implementations throw
// BridgeError when a request cannot be served; the caller discards the
// instance and builds a fresh one before retrying.
class Transcriber {
 public:
  virtual ~Transcriber() = default;
  // Model identifier (the handshake reply for external bridges).
  virtual std::string model_name() = 0;
  virtual std::string transcribe(const TranscriptionRequest& request) = 0;
};

// Echoes the reference.
class OracleTranscriber : public Transcriber {
 public:
  std::string model_name() override { return "oracle"; }
  std::string transcribe(const TranscriptionRequest& request) override;
};

// Always returns an empty transcript.
class EmptyTranscriber : public Transcriber {
 public:
  std::string model_name() override { return "empty"; }
  std::string transcribe(const TranscriptionRequest& request) override;
};

// Echoes the reference with each word dropped independently with
// probability p. The draw is seeded from the request id.
class NoisyOracleTranscriber : public Transcriber {
 public:
  explicit NoisyOracleTranscriber(double drop_probability);
  std::string model_name() override;
  std::string transcribe(const TranscriptionRequest& request) override;

 private:
  double p_;
};

// External bridge process speaking line-delimited JSON on its standard
// streams:
//   -> {"id":"__hello__"}                 <- {"id":"__hello__","text":<model>}
//   -> {"id":<id>,"wav":<absolute path>}  <- {"id":<id>,"text":<transcript>}
//                                          | {"id":<id>,"error":<message>}
// The command runs under /bin/sh -c. The process is started and probed on
// first use. Any protocol violation, crash, error reply or timeout kills the
// process and throws BridgeError. Requests are serialized per instance.
class SubprocessTranscriber : public Transcriber {
 public:
  SubprocessTranscriber(std::string command, std::chrono::milliseconds timeout);
  ~SubprocessTranscriber() override;
  SubprocessTranscriber(const SubprocessTranscriber&) = delete;
  SubprocessTranscriber& operator=(const SubprocessTranscriber&) = delete;

  std::string model_name() override;
  std::string transcribe(const TranscriptionRequest& request) override;

 private:
  void start();
  void stop();
  [[noreturn]] void fail(const std::string& what);
  void send_line(const std::string& line);
  std::string read_line();
  std::string exchange(const std::string& id, const std::string& request);

  std::string command_;
  std::chrono::milliseconds timeout_;
  int pid_ = -1;
  int fd_ = -1;
  std::string pending_;
  std::string model_;
};

using TranscriberFactory = std::function<std::unique_ptr<Transcriber>()>;

// "oracle", "empty", "noisy-oracle(<p>)", or any other text, which is taken
// as a shell command for SubprocessTranscriber. Throws ParameterError for a
// malformed noisy-oracle probability.
TranscriberFactory make_transcriber_factory(const std::string& bridge,
                                            std::chrono::milliseconds timeout);

}  // namespace perturbbench

#endif  // PERTURBBENCH_HARNESS_BRIDGE_H_

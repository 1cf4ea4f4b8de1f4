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

// Stand-in transcription process for exercising the bridge protocol.
//
//   mock_bridge <mode> [arg]
//
//   fixed <text>        answer every request with <text>
//   wavlen              answer with "samples <n>" for the requested WAV
//   crash_once <state>  exit on the first request if <state> does not exist
//                       (creating it), then behave like fixed "ok"
//   crash               exit on every request
//   hang                never answer requests
//   error               answer every request with an error object
//   bad_id              answer with a mismatched id
//   no_hello            exit before answering the handshake

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <json.hpp>

#include "perturbbench/signal/wav.h"

using json = nlohmann::json;

int main(int argc, char** argv) {
  if (argc < 2) return 64;
  const std::string mode = argv[1];
  const std::string arg = argc > 2 ? argv[2] : "";
  if (mode == "no_hello") return 1;

  std::string line;
  while (std::getline(std::cin, line)) {
    const json request = json::parse(line, nullptr, false);
    if (request.is_discarded() || !request.contains("id")) {
      std::cout << json{{"id", ""}, {"error", "malformed request"}}.dump()
                << std::endl;
      continue;
    }
    const std::string id = request["id"].get<std::string>();
    if (id == "__hello__") {
      std::cout << json{{"id", id}, {"text", "mock-" + mode}}.dump() << std::endl;
      continue;
    }
    json reply{{"id", id}};
    if (mode == "fixed") {
      reply["text"] = arg;
    } else if (mode == "wavlen") {
      const auto audio =
          perturbbench::load_wav(request["wav"].get<std::string>());
      reply["text"] = "samples " + std::to_string(audio.size());
    } else if (mode == "crash_once") {
      if (!std::filesystem::exists(arg)) {
        std::ofstream(arg) << "crashed\n";
        return 1;
      }
      reply["text"] = "ok";
    } else if (mode == "crash") {
      return 1;
    } else if (mode == "hang") {
      std::this_thread::sleep_for(std::chrono::hours(1));
    } else if (mode == "error") {
      reply["error"] = "cannot decode";
    } else if (mode == "bad_id") {
      reply["id"] = id + "x";
      reply["text"] = "ok";
    } else {
      return 64;
    }
    std::cout << reply.dump() << std::endl;
  }
  return 0;
}

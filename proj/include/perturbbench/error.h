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

#ifndef PERTURBBENCH_ERROR_H_
#define PERTURBBENCH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace perturbbench {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value is outside the operation's domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// StftConfig (or similar geometry) violates its invariants.
class ConfigError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class ChannelCountError : public FormatError {
 public:
  using FormatError::FormatError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ManifestError : public Error {
 public:
  ManifestError(std::size_t line, const std::string& what)
      : Error("manifest line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// WER is undefined when the reference has no tokens.
class UndefinedReferenceError : public Error {
 public:
  using Error::Error;
};

class BridgeError : public Error {
 public:
  using Error::Error;
};

}  // namespace perturbbench

#endif  // PERTURBBENCH_ERROR_H_

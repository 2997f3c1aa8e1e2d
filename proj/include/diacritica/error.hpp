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

#ifndef DIACRITICA_ERROR_HPP_
#define DIACRITICA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace diacritica {

// Malformed or inconsistent input data (corpus, table, model, lexicon files).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or command-line usage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Base class for every failure raised by a restoration backend.
class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConnectionError : public BackendError {
 public:
  using BackendError::BackendError;
};

class TimeoutError : public BackendError {
 public:
  using BackendError::BackendError;
};

class ProtocolError : public BackendError {
 public:
  using BackendError::BackendError;
};

// An `E` message returned by the server for a request.
class RemoteError : public BackendError {
 public:
  RemoteError(std::string code, const std::string& message)
      : BackendError(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace diacritica

#endif  // DIACRITICA_ERROR_HPP_

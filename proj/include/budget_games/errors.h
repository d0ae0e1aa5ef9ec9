// Copyright 2026 The Budget Games Authors
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

#ifndef BUDGET_GAMES_ERRORS_H_
#define BUDGET_GAMES_ERRORS_H_

#include <stdexcept>
#include <string>

namespace budget_games {

// Base class for every error the library reports. The CLI maps these to exit
// code 1; usage errors never reach the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed game, state or deviation: unknown ids, out-of-range indices,
// violated model invariants.
class ModelError : public Error {
 public:
  using Error::Error;
};

// A brute-force routine was asked to enumerate more than its configured cap.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Instance text that cannot be read. `path` is a JSON pointer into the
// document for semantic errors; line/column are set for syntax errors.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string path = "", int line = 0,
             int column = 0)
      : Error(message), path_(std::move(path)), line_(line), column_(column) {}

  const std::string& path() const { return path_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string path_;
  int line_;
  int column_;
};

}  // namespace budget_games

#endif  // BUDGET_GAMES_ERRORS_H_

// Copyright 2026 The translit Authors.
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

#ifndef TRANSLIT_ERRORS_H_
#define TRANSLIT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace translit {

// Input that names a symbol, glyph or word outside the relevant alphabet.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition between two machines or models (alphabet mismatch,
// inconsistent chain).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A model could not be constructed from otherwise well-formed resources.
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// EM training could not run (e.g. no alignable pair).
class TrainingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed resource file. Carries the source name and 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string &source, std::size_t line,
             const std::string &what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string &source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace translit

#endif  // TRANSLIT_ERRORS_H_

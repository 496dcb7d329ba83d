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

#ifndef TRANSLIT_TEXT_UTIL_H_
#define TRANSLIT_TEXT_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace translit {

// Lines that are empty, all whitespace, or start with '#'.
bool IsBlankOrComment(std::string_view line);

std::string_view StripWhitespace(std::string_view s);

// Splits on every TAB; keeps empty fields. A trailing '\r' is dropped.
std::vector<std::string> SplitTabs(std::string_view line);

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string> SplitWhitespace(std::string_view s);

std::string Join(const std::vector<std::string> &parts,
                 std::string_view sep = " ");

std::int64_t ParseInt(std::string_view field, const std::string &source,
                      std::size_t line);
double ParseDouble(std::string_view field, const std::string &source,
                   std::size_t line);

// Lowercases ASCII and collapses whitespace runs to single spaces.
std::string NormalizeWords(std::string_view s);

// Shortest round-tripping "%.17g"-style rendering.
std::string FormatCost(double v);
// "%.*g" with the given significant digits.
std::string FormatDouble(double v, int digits);

// Splits a UTF-8 string into code points, each returned as its own
// UTF-8 substring. Returns nullopt on malformed input (bad lead byte,
// truncated or overlong sequence, surrogate, > U+10FFFF).
std::optional<std::vector<std::string>> SplitUtf8(std::string_view s);

}  // namespace translit

#endif  // TRANSLIT_TEXT_UTIL_H_

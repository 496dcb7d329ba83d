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

#ifndef TRANSLIT_SYMBOL_TABLE_H_
#define TRANSLIT_SYMBOL_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace translit {

using Label = std::int32_t;

inline constexpr Label kEpsilon = 0;
inline constexpr std::string_view kEpsilonString = "<eps>";

// Bijection between labels and dense integer ids for one alphabet.
// Id 0 is always epsilon.
class SymbolTable {
 public:
  explicit SymbolTable(std::string name = "");

  const std::string &Name() const { return name_; }

  // Returns the existing id when the label is already registered.
  Label AddSymbol(std::string_view label);

  std::optional<Label> Find(std::string_view label) const;
  // Throws InputError naming the label when it is not registered.
  Label FindOrThrow(std::string_view label) const;
  const std::string &LabelOf(Label id) const;
  bool Contains(std::string_view label) const { return Find(label).has_value(); }

  std::size_t Size() const { return labels_.size(); }
  const std::vector<std::string> &Labels() const { return labels_; }

  // Same name-independent content: identical label at every id.
  bool SameSymbols(const SymbolTable &other) const {
    return labels_ == other.labels_;
  }

  // One `label<TAB>id` line per symbol, epsilon first.
  void WriteText(std::ostream &os) const;
  static SymbolTable ReadText(std::istream &is, std::string name,
                              const std::string &source = "<stream>");

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Label> ids_;
};

}  // namespace translit

#endif  // TRANSLIT_SYMBOL_TABLE_H_

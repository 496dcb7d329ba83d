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

#include "translit/symbol_table.h"

#include <istream>
#include <ostream>
#include <stdexcept>

#include "translit/errors.h"
#include "translit/text_util.h"

namespace translit {

SymbolTable::SymbolTable(std::string name) : name_(std::move(name)) {
  AddSymbol(kEpsilonString);
}

Label SymbolTable::AddSymbol(std::string_view label) {
  if (label.empty()) throw std::invalid_argument("empty symbol label");
  std::string key(label);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const auto id = static_cast<Label>(labels_.size());
  labels_.push_back(key);
  ids_.emplace(std::move(key), id);
  return id;
}

std::optional<Label> SymbolTable::Find(std::string_view label) const {
  auto it = ids_.find(std::string(label));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Label SymbolTable::FindOrThrow(std::string_view label) const {
  if (auto id = Find(label)) return *id;
  throw InputError("unknown symbol '" + std::string(label) + "'" +
                   (name_.empty() ? "" : " in alphabet " + name_));
}

const std::string &SymbolTable::LabelOf(Label id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= labels_.size()) {
    throw std::out_of_range("symbol id " + std::to_string(id) +
                            " not in alphabet " + name_);
  }
  return labels_[id];
}

void SymbolTable::WriteText(std::ostream &os) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    os << labels_[i] << '\t' << i << '\n';
  }
}

SymbolTable SymbolTable::ReadText(std::istream &is, std::string name,
                                  const std::string &source) {
  SymbolTable table(std::move(name));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (IsBlankOrComment(line)) continue;
    auto fields = SplitTabs(line);
    if (fields.size() != 2) {
      throw ParseError(source, lineno, "expected label<TAB>id");
    }
    const auto id = ParseInt(fields[1], source, lineno);
    if (id == 0) {
      if (fields[0] != kEpsilonString) {
        throw ParseError(source, lineno, "id 0 is reserved for <eps>");
      }
      continue;
    }
    if (static_cast<std::size_t>(id) != table.Size() ||
        table.Contains(fields[0])) {
      throw ParseError(source, lineno,
                       "symbol ids must be dense, unique and ascending");
    }
    table.AddSymbol(fields[0]);
  }
  return table;
}

}  // namespace translit

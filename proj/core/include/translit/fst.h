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

#ifndef TRANSLIT_FST_H_
#define TRANSLIT_FST_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "translit/symbol_table.h"
#include "translit/weight.h"

namespace translit {

using StateId = std::int32_t;
inline constexpr StateId kNoState = -1;

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  Weight weight;
  StateId nextstate = kNoState;

  friend bool operator==(const Arc &, const Arc &) = default;
};

// Mutable-vector weighted transducer over the tropical semiring. An acceptor
// (WFSA) is an Fst whose arcs all carry ilabel == olabel and whose two
// symbol tables are the same alphabet.
//
// Once built, an Fst is only read; const access is safe from many threads.
class Fst {
 public:
  Fst(SymbolTablePtr isyms, SymbolTablePtr osyms);

  StateId AddState();
  void SetStart(StateId s);
  // Final weight must be a valid arc weight; Weight::Zero() clears finality.
  void SetFinal(StateId s, Weight w);
  void AddArc(StateId src, const Arc &arc);
  void ReserveStates(std::size_t n);

  StateId Start() const { return start_; }
  std::size_t NumStates() const { return states_.size(); }
  std::size_t NumArcs() const;
  std::size_t NumArcs(StateId s) const { return states_.at(s).arcs.size(); }
  Weight Final(StateId s) const { return states_.at(s).final; }
  bool IsFinal(StateId s) const { return !Final(s).IsZero(); }
  std::span<const Arc> Arcs(StateId s) const { return states_.at(s).arcs; }

  const SymbolTablePtr &InputSymbols() const { return isyms_; }
  const SymbolTablePtr &OutputSymbols() const { return osyms_; }

  bool IsAcceptor() const;
  // True when no state is final or reachable; see Trim.
  bool IsEmpty() const;

  // Same tables (by content), start, finals and arc lists in order.
  bool StructurallyEquals(const Fst &other) const;

 private:
  struct State {
    Weight final = Weight::Zero();
    std::vector<Arc> arcs;
  };

  SymbolTablePtr isyms_;
  SymbolTablePtr osyms_;
  StateId start_ = kNoState;
  std::vector<State> states_;
};

}  // namespace translit

#endif  // TRANSLIT_FST_H_

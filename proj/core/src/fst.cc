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

#include "translit/fst.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace translit {

Fst::Fst(SymbolTablePtr isyms, SymbolTablePtr osyms)
    : isyms_(std::move(isyms)), osyms_(std::move(osyms)) {
  if (!isyms_ || !osyms_) throw std::invalid_argument("null symbol table");
}

StateId Fst::AddState() {
  states_.emplace_back();
  return static_cast<StateId>(states_.size() - 1);
}

void Fst::SetStart(StateId s) {
  if (s < 0 || static_cast<std::size_t>(s) >= states_.size()) {
    throw std::out_of_range("start state " + std::to_string(s));
  }
  start_ = s;
}

void Fst::SetFinal(StateId s, Weight w) {
  if (!w.IsZero() && !w.IsValidArcWeight()) {
    throw std::invalid_argument("final cost must be finite and >= 0");
  }
  states_.at(s).final = w;
}

void Fst::AddArc(StateId src, const Arc &arc) {
  if (arc.nextstate < 0 ||
      static_cast<std::size_t>(arc.nextstate) >= states_.size()) {
    throw std::out_of_range("arc destination " +
                            std::to_string(arc.nextstate));
  }
  if (!arc.weight.IsValidArcWeight()) {
    throw std::invalid_argument("arc cost must be finite and >= 0");
  }
  if (arc.ilabel < 0 ||
      static_cast<std::size_t>(arc.ilabel) >= isyms_->Size() ||
      arc.olabel < 0 ||
      static_cast<std::size_t>(arc.olabel) >= osyms_->Size()) {
    throw std::out_of_range("arc label outside symbol table");
  }
  states_.at(src).arcs.push_back(arc);
}

void Fst::ReserveStates(std::size_t n) { states_.reserve(n); }

std::size_t Fst::NumArcs() const {
  std::size_t n = 0;
  for (const auto &s : states_) n += s.arcs.size();
  return n;
}

bool Fst::IsAcceptor() const {
  if (!isyms_->SameSymbols(*osyms_)) return false;
  for (const auto &s : states_) {
    for (const auto &a : s.arcs) {
      if (a.ilabel != a.olabel) return false;
    }
  }
  return true;
}

bool Fst::IsEmpty() const {
  if (start_ == kNoState) return true;
  for (const auto &s : states_) {
    if (!s.final.IsZero()) return false;
  }
  return true;
}

bool Fst::StructurallyEquals(const Fst &other) const {
  if (!isyms_->SameSymbols(*other.isyms_) ||
      !osyms_->SameSymbols(*other.osyms_) || start_ != other.start_ ||
      states_.size() != other.states_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i].final != other.states_[i].final ||
        states_[i].arcs != other.states_[i].arcs) {
      return false;
    }
  }
  return true;
}

}  // namespace translit

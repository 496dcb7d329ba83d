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

#include "translit/fst_ops.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "translit/errors.h"

namespace translit {

Fst LinearAcceptor(std::span<const std::string> seq,
                   const SymbolTablePtr &table) {
  std::vector<Label> ids;
  ids.reserve(seq.size());
  for (const auto &s : seq) ids.push_back(table->FindOrThrow(s));
  return LinearAcceptor(std::span<const Label>(ids), table);
}

Fst LinearAcceptor(std::span<const Label> seq, const SymbolTablePtr &table) {
  Fst fst(table, table);
  fst.ReserveStates(seq.size() + 1);
  StateId prev = fst.AddState();
  fst.SetStart(prev);
  for (Label l : seq) {
    if (l == kEpsilon) throw InputError("epsilon inside a linear acceptor");
    StateId next = fst.AddState();
    fst.AddArc(prev, Arc{l, l, Weight::One(), next});
    prev = next;
  }
  fst.SetFinal(prev, Weight::One());
  return fst;
}

Fst EmptyFst(SymbolTablePtr isyms, SymbolTablePtr osyms) {
  Fst fst(std::move(isyms), std::move(osyms));
  fst.SetStart(fst.AddState());
  return fst;
}

namespace {

// Composite state: a-state, b-state and epsilon filter state.
//   0: after a matched (or start) move; any epsilon move allowed
//   1: after a b-only epsilon move; only b-only or matched moves
//   2: after an a-only epsilon move; only a-only or matched moves
struct ComposeTuple {
  StateId a;
  StateId b;
  std::uint8_t filter;
  friend bool operator==(const ComposeTuple &, const ComposeTuple &) = default;
};

struct ComposeTupleHash {
  std::size_t operator()(const ComposeTuple &t) const {
    std::uint64_t h = static_cast<std::uint32_t>(t.a);
    h = h * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint32_t>(t.b);
    h = h * 0x9E3779B97F4A7C15ULL ^ t.filter;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Per-state arcs of `fst` ordered by input label, for matching.
class InputIndex {
 public:
  explicit InputIndex(const Fst &fst) : fst_(fst), order_(fst.NumStates()) {
    for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
      auto &idx = order_[s];
      idx.resize(fst.NumArcs(s));
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      auto arcs = fst.Arcs(s);
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return arcs[x].ilabel < arcs[y].ilabel;
      });
    }
  }

  template <typename F>
  void ForEachMatch(StateId s, Label ilabel, F &&f) const {
    auto arcs = fst_.Arcs(s);
    const auto &idx = order_[s];
    auto lo = std::lower_bound(idx.begin(), idx.end(), ilabel,
                               [&](std::size_t i, Label l) {
                                 return arcs[i].ilabel < l;
                               });
    for (; lo != idx.end() && arcs[*lo].ilabel == ilabel; ++lo) f(arcs[*lo]);
  }

 private:
  const Fst &fst_;
  std::vector<std::vector<std::size_t>> order_;
};

}  // namespace

Fst Compose(const Fst &a, const Fst &b) {
  if (a.OutputSymbols() != b.InputSymbols() &&
      !a.OutputSymbols()->SameSymbols(*b.InputSymbols())) {
    throw ContractError("compose: output alphabet '" +
                        a.OutputSymbols()->Name() +
                        "' does not match input alphabet '" +
                        b.InputSymbols()->Name() + "'");
  }
  if (a.Start() == kNoState || b.Start() == kNoState) {
    return EmptyFst(a.InputSymbols(), b.OutputSymbols());
  }

  Fst out(a.InputSymbols(), b.OutputSymbols());
  const InputIndex b_index(b);
  std::unordered_map<ComposeTuple, StateId, ComposeTupleHash> ids;
  std::deque<ComposeTuple> queue;

  auto state_of = [&](const ComposeTuple &t) {
    auto [it, inserted] = ids.try_emplace(t, kNoState);
    if (inserted) {
      it->second = out.AddState();
      queue.push_back(t);
    }
    return it->second;
  };

  out.SetStart(state_of({a.Start(), b.Start(), 0}));
  while (!queue.empty()) {
    const ComposeTuple t = queue.front();
    queue.pop_front();
    const StateId src = ids.at(t);

    if (a.IsFinal(t.a) && b.IsFinal(t.b)) {
      out.SetFinal(src, Times(a.Final(t.a), b.Final(t.b)));
    }

    for (const Arc &ea : a.Arcs(t.a)) {
      if (ea.olabel != kEpsilon) {
        b_index.ForEachMatch(t.b, ea.olabel, [&](const Arc &eb) {
          StateId dst = state_of({ea.nextstate, eb.nextstate, 0});
          out.AddArc(src, Arc{ea.ilabel, eb.olabel,
                              Times(ea.weight, eb.weight), dst});
        });
        continue;
      }
      if (t.filter != 1) {
        StateId dst = state_of({ea.nextstate, t.b, 2});
        out.AddArc(src, Arc{ea.ilabel, kEpsilon, ea.weight, dst});
      }
      if (t.filter == 0) {
        b_index.ForEachMatch(t.b, kEpsilon, [&](const Arc &eb) {
          StateId dst = state_of({ea.nextstate, eb.nextstate, 0});
          out.AddArc(src, Arc{ea.ilabel, eb.olabel,
                              Times(ea.weight, eb.weight), dst});
        });
      }
    }
    if (t.filter != 2) {
      b_index.ForEachMatch(t.b, kEpsilon, [&](const Arc &eb) {
        StateId dst = state_of({t.a, eb.nextstate, 1});
        out.AddArc(src, Arc{kEpsilon, eb.olabel, eb.weight, dst});
      });
    }
  }
  return out;
}

Fst Invert(const Fst &fst) {
  Fst out(fst.OutputSymbols(), fst.InputSymbols());
  out.ReserveStates(fst.NumStates());
  for (std::size_t s = 0; s < fst.NumStates(); ++s) out.AddState();
  if (fst.Start() != kNoState) out.SetStart(fst.Start());
  for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
    out.SetFinal(s, fst.Final(s));
    for (const Arc &arc : fst.Arcs(s)) {
      out.AddArc(s, Arc{arc.olabel, arc.ilabel, arc.weight, arc.nextstate});
    }
  }
  return out;
}

namespace {

Fst Project(const Fst &fst, bool keep_output) {
  const auto &syms = keep_output ? fst.OutputSymbols() : fst.InputSymbols();
  Fst out(syms, syms);
  out.ReserveStates(fst.NumStates());
  for (std::size_t s = 0; s < fst.NumStates(); ++s) out.AddState();
  if (fst.Start() != kNoState) out.SetStart(fst.Start());
  for (StateId s = 0; s < static_cast<StateId>(fst.NumStates()); ++s) {
    out.SetFinal(s, fst.Final(s));
    for (const Arc &arc : fst.Arcs(s)) {
      Label l = keep_output ? arc.olabel : arc.ilabel;
      out.AddArc(s, Arc{l, l, arc.weight, arc.nextstate});
    }
  }
  return out;
}

}  // namespace

Fst ProjectOutput(const Fst &fst) { return Project(fst, true); }
Fst ProjectInput(const Fst &fst) { return Project(fst, false); }

Fst Trim(const Fst &fst) {
  const std::size_t n = fst.NumStates();
  if (fst.Start() == kNoState) {
    return EmptyFst(fst.InputSymbols(), fst.OutputSymbols());
  }

  std::vector<char> accessible(n, 0);
  std::vector<StateId> stack{fst.Start()};
  accessible[fst.Start()] = 1;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const Arc &arc : fst.Arcs(s)) {
      if (!accessible[arc.nextstate]) {
        accessible[arc.nextstate] = 1;
        stack.push_back(arc.nextstate);
      }
    }
  }

  std::vector<std::vector<StateId>> reverse(n);
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (!accessible[s]) continue;
    for (const Arc &arc : fst.Arcs(s)) reverse[arc.nextstate].push_back(s);
  }
  std::vector<char> coaccessible(n, 0);
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (accessible[s] && fst.IsFinal(s)) {
      coaccessible[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : reverse[s]) {
      if (!coaccessible[p]) {
        coaccessible[p] = 1;
        stack.push_back(p);
      }
    }
  }

  if (!coaccessible[fst.Start()]) {
    return EmptyFst(fst.InputSymbols(), fst.OutputSymbols());
  }

  std::vector<StateId> remap(n, kNoState);
  Fst out(fst.InputSymbols(), fst.OutputSymbols());
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (accessible[s] && coaccessible[s]) remap[s] = out.AddState();
  }
  out.SetStart(remap[fst.Start()]);
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (remap[s] == kNoState) continue;
    out.SetFinal(remap[s], fst.Final(s));
    for (const Arc &arc : fst.Arcs(s)) {
      if (remap[arc.nextstate] == kNoState) continue;
      out.AddArc(remap[s], Arc{arc.ilabel, arc.olabel, arc.weight,
                               remap[arc.nextstate]});
    }
  }
  return out;
}

}  // namespace translit

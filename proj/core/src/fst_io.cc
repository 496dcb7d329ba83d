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

#include "translit/fst_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <utility>

#include "translit/errors.h"
#include "translit/fst_ops.h"
#include "translit/text_util.h"

namespace translit {

void WriteText(const Fst &fst, std::ostream &os) {
  const StateId start = fst.Start();
  if (start == kNoState || (fst.NumArcs(start) == 0 && !fst.IsFinal(start))) {
    return;  // accepts nothing
  }
  // Swap the start state into slot 0 so that it is listed first.
  auto id = [start](StateId s) {
    if (s == start) return StateId{0};
    if (s == 0) return start;
    return s;
  };
  const auto &isyms = *fst.InputSymbols();
  const auto &osyms = *fst.OutputSymbols();
  for (StateId n = 0; n < static_cast<StateId>(fst.NumStates()); ++n) {
    const StateId s = id(n);  // id() is its own inverse
    for (const Arc &arc : fst.Arcs(s)) {
      os << n << '\t' << id(arc.nextstate) << '\t' << isyms.LabelOf(arc.ilabel)
         << '\t' << osyms.LabelOf(arc.olabel) << '\t'
         << FormatCost(arc.weight.Cost()) << '\n';
    }
    if (fst.IsFinal(s)) {
      os << n << '\t' << FormatCost(fst.Final(s).Cost()) << '\n';
    }
  }
}

Fst ReadText(std::istream &is, SymbolTablePtr isyms, SymbolTablePtr osyms,
             const std::string &source) {
  Fst fst(isyms, osyms);
  auto ensure = [&fst](std::int64_t s) {
    while (static_cast<std::int64_t>(fst.NumStates()) <= s) fst.AddState();
    return static_cast<StateId>(s);
  };
  auto state_field = [&](const std::string &f, std::size_t lineno) {
    auto v = ParseInt(f, source, lineno);
    if (v < 0 || v > (1LL << 30)) {
      throw ParseError(source, lineno, "state id out of range");
    }
    return ensure(v);
  };
  auto cost_field = [&](const std::string &f, std::size_t lineno) {
    Weight w(ParseDouble(f, source, lineno));
    if (!w.IsValidArcWeight()) {
      throw ParseError(source, lineno, "cost must be finite and >= 0");
    }
    return w;
  };
  auto label_field = [&](const SymbolTable &t, const std::string &f,
                         std::size_t lineno) {
    auto l = t.Find(f);
    if (!l) {
      throw ParseError(source, lineno,
                       "label '" + f + "' not in alphabet " + t.Name());
    }
    return *l;
  };

  std::string line;
  std::size_t lineno = 0;
  bool have_start = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (StripWhitespace(line).empty()) continue;
    auto fields = SplitTabs(line);
    StateId src;
    if (fields.size() == 5) {
      src = state_field(fields[0], lineno);
      StateId dst = state_field(fields[1], lineno);
      Arc arc{label_field(*isyms, fields[2], lineno),
              label_field(*osyms, fields[3], lineno),
              cost_field(fields[4], lineno), dst};
      fst.AddArc(src, arc);
    } else if (fields.size() == 2) {
      src = state_field(fields[0], lineno);
      fst.SetFinal(src, cost_field(fields[1], lineno));
    } else {
      throw ParseError(source, lineno,
                       "expected 5 fields (arc) or 2 fields (final state)");
    }
    if (!have_start) {
      fst.SetStart(src);
      have_start = true;
    }
  }
  if (!have_start) return EmptyFst(std::move(isyms), std::move(osyms));
  return fst;
}

void WriteTextFile(const Fst &fst, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  WriteText(fst, os);
  if (!os) throw std::runtime_error("write failed: " + path);
}

Fst ReadTextFile(const std::string &path, SymbolTablePtr isyms,
                 SymbolTablePtr osyms) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  return ReadText(is, std::move(isyms), std::move(osyms), path);
}

}  // namespace translit

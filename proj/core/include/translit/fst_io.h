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

#ifndef TRANSLIT_FST_IO_H_
#define TRANSLIT_FST_IO_H_

#include <iosfwd>
#include <string>

#include "translit/fst.h"

namespace translit {

// Text format, one record per line, UTF-8:
//   src<TAB>dst<TAB>inLabel<TAB>outLabel<TAB>cost   (arc)
//   state<TAB>cost                                  (final state)
// The first listed state is the start; epsilon is written as <eps>.
// Costs carry 17 significant digits so reloading is exact. An empty file
// denotes the empty machine.
void WriteText(const Fst &fst, std::ostream &os);
Fst ReadText(std::istream &is, SymbolTablePtr isyms, SymbolTablePtr osyms,
             const std::string &source = "<stream>");

void WriteTextFile(const Fst &fst, const std::string &path);
Fst ReadTextFile(const std::string &path, SymbolTablePtr isyms,
                 SymbolTablePtr osyms);

}  // namespace translit

#endif  // TRANSLIT_FST_IO_H_

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

#ifndef TRANSLIT_FST_OPS_H_
#define TRANSLIT_FST_OPS_H_

#include <span>
#include <string>
#include <vector>

#include "translit/fst.h"

namespace translit {

// Chain acceptor with seq.size()+1 states accepting exactly `seq` at cost 0.
// Throws InputError naming the first label missing from `table`.
Fst LinearAcceptor(std::span<const std::string> seq,
                   const SymbolTablePtr &table);
Fst LinearAcceptor(std::span<const Label> seq, const SymbolTablePtr &table);

// Machine with a single non-final start state and no arcs.
Fst EmptyFst(SymbolTablePtr isyms, SymbolTablePtr osyms);

// Relational composition over the tropical semiring. `a`'s output alphabet
// must equal `b`'s input alphabet (ContractError otherwise). Epsilons on
// either side are sequenced by a three-state filter so that epsilon moves
// cannot interleave unboundedly; the result is accessible but not trimmed.
Fst Compose(const Fst &a, const Fst &b);

// Swaps input and output labels and symbol tables.
Fst Invert(const Fst &fst);

// Keeps the output side: every arc becomes olabel:olabel.
Fst ProjectOutput(const Fst &fst);
Fst ProjectInput(const Fst &fst);

// Keeps exactly the states and arcs on some start-to-final path,
// renumbered densely in their original order. A machine without such a path
// becomes EmptyFst.
Fst Trim(const Fst &fst);

}  // namespace translit

#endif  // TRANSLIT_FST_OPS_H_

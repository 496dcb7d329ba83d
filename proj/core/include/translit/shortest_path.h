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

#ifndef TRANSLIT_SHORTEST_PATH_H_
#define TRANSLIT_SHORTEST_PATH_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "translit/fst.h"

namespace translit {

struct PathArc {
  StateId src = kNoState;
  Arc arc;
};

// A start-to-final walk. Label sequences have epsilons removed.
struct Path {
  std::vector<PathArc> arcs;
  Weight cost;
  std::vector<Label> ilabels;
  std::vector<Label> olabels;
};

struct KBestOptions {
  // Skip paths whose output label sequence was already returned.
  bool unique_outputs = false;
  // Upper bound on search-node expansions; enumeration stops early when
  // exceeded (relevant for cyclic machines with many equal paths).
  std::size_t max_expansions = 2'000'000;
  // Equal-cost paths examined past the k-th for deterministic tie order.
  std::size_t max_ties = 64;
};

// Minimum-cost paths in non-decreasing cost order, at most k of them.
// Paths whose costs agree to 1e-12 relative are ordered lexicographically
// by output labels, then input labels (compared as strings).
std::vector<Path> KBest(const Fst &fst, std::size_t k,
                        const KBestOptions &opts = {});

// KBest(fst, 1); nullopt when the machine accepts nothing.
std::optional<Path> BestPath(const Fst &fst);

// Cost of the cheapest path from every state to a final state
// (Weight::Zero() where none exists).
std::vector<Weight> ShortestDistanceToFinal(const Fst &fst);

std::vector<std::string> Labels(const std::vector<Label> &ids,
                                const SymbolTable &table);
// Labels joined by single spaces.
std::string JoinLabels(const std::vector<Label> &ids, const SymbolTable &table,
                       const std::string &sep = " ");

}  // namespace translit

#endif  // TRANSLIT_SHORTEST_PATH_H_

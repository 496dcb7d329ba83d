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

#include "translit/shortest_path.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <utility>

namespace translit {

std::vector<Weight> ShortestDistanceToFinal(const Fst &fst) {
  const std::size_t n = fst.NumStates();
  std::vector<std::vector<std::pair<StateId, double>>> reverse(n);
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    for (const Arc &arc : fst.Arcs(s)) {
      reverse[arc.nextstate].emplace_back(s, arc.weight.Cost());
    }
  }
  std::vector<Weight> dist(n, Weight::Zero());
  using Entry = std::pair<double, StateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (fst.IsFinal(s)) {
      dist[s] = fst.Final(s);
      heap.emplace(dist[s].Cost(), s);
    }
  }
  std::vector<char> done(n, 0);
  while (!heap.empty()) {
    auto [d, s] = heap.top();
    heap.pop();
    if (done[s]) continue;
    done[s] = 1;
    for (auto [p, w] : reverse[s]) {
      const double nd = d + w;
      if (nd < dist[p].Cost()) {
        dist[p] = Weight(nd);
        heap.emplace(nd, p);
      }
    }
  }
  return dist;
}

namespace {

// Search node of the best-first path enumeration. `arc` indexes the parent
// state's arc list; kFinalArc marks the completion step through a final
// weight.
struct SearchNode {
  StateId state;
  double cost;
  std::int64_t parent;
  std::int64_t arc;
};

constexpr std::int64_t kFinalArc = -1;
constexpr std::int64_t kNoParent = -1;

bool CostsTie(double a, double b) { return ApproxEqual(a, b, 1e-12); }

Path Reconstruct(const Fst &fst, const std::vector<SearchNode> &nodes,
                 std::int64_t leaf) {
  Path path;
  path.cost = Weight(nodes[leaf].cost);
  // The leaf is the final-weight completion node; walk from its parent.
  for (std::int64_t i = nodes[leaf].parent; nodes[i].parent != kNoParent;
       i = nodes[i].parent) {
    const SearchNode &node = nodes[i];
    const StateId src = nodes[node.parent].state;
    path.arcs.push_back(PathArc{src, fst.Arcs(src)[node.arc]});
  }
  std::reverse(path.arcs.begin(), path.arcs.end());
  for (const auto &pa : path.arcs) {
    if (pa.arc.ilabel != kEpsilon) path.ilabels.push_back(pa.arc.ilabel);
    if (pa.arc.olabel != kEpsilon) path.olabels.push_back(pa.arc.olabel);
  }
  return path;
}

bool LabelsLess(const Fst &fst, const Path &x, const Path &y) {
  auto cmp = [](const std::vector<Label> &a, const std::vector<Label> &b,
                const SymbolTable &t) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [&](Label l, Label r) {
          return t.LabelOf(l) < t.LabelOf(r);
        });
  };
  const auto &osyms = *fst.OutputSymbols();
  if (cmp(x.olabels, y.olabels, osyms)) return true;
  if (cmp(y.olabels, x.olabels, osyms)) return false;
  return cmp(x.ilabels, y.ilabels, *fst.InputSymbols());
}

}  // namespace

std::vector<Path> KBest(const Fst &fst, std::size_t k,
                        const KBestOptions &opts) {
  std::vector<Path> result;
  if (k == 0 || fst.Start() == kNoState) return result;
  const auto to_final = ShortestDistanceToFinal(fst);
  if (to_final[fst.Start()].IsZero()) return result;

  std::vector<SearchNode> nodes;
  using Entry = std::pair<double, std::int64_t>;  // (priority, node index)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  nodes.push_back({fst.Start(), 0.0, kNoParent, kFinalArc});
  heap.emplace(to_final[fst.Start()].Cost(), 0);

  std::set<std::vector<Label>> seen_outputs;
  std::size_t expansions = 0;
  std::size_t ties = 0;
  while (!heap.empty() && expansions < opts.max_expansions) {
    const auto [priority, index] = heap.top();
    if (result.size() >= k) {
      if (ties >= opts.max_ties ||
          !(priority <= result[k - 1].cost.Cost() ||
            CostsTie(priority, result[k - 1].cost.Cost()))) {
        break;
      }
    }
    heap.pop();
    ++expansions;
    const SearchNode node = nodes[index];

    if (node.arc == kFinalArc && node.parent != kNoParent) {
      Path path = Reconstruct(fst, nodes, index);
      if (opts.unique_outputs && !seen_outputs.insert(path.olabels).second) {
        continue;
      }
      if (result.size() >= k) {
        if (!CostsTie(path.cost.Cost(), result[k - 1].cost.Cost())) break;
        ++ties;
      }
      result.push_back(std::move(path));
      continue;
    }

    if (fst.IsFinal(node.state)) {
      const double c = node.cost + fst.Final(node.state).Cost();
      nodes.push_back({node.state, c, index, kFinalArc});
      heap.emplace(c, static_cast<std::int64_t>(nodes.size() - 1));
    }
    auto arcs = fst.Arcs(node.state);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto h = to_final[arcs[i].nextstate];
      if (h.IsZero()) continue;
      const double c = node.cost + arcs[i].weight.Cost();
      nodes.push_back({arcs[i].nextstate, c, index,
                       static_cast<std::int64_t>(i)});
      heap.emplace(c + h.Cost(), static_cast<std::int64_t>(nodes.size() - 1));
    }
  }

  // Deterministic order within runs of equal cost.
  for (std::size_t begin = 0; begin < result.size();) {
    std::size_t end = begin + 1;
    while (end < result.size() &&
           CostsTie(result[end].cost.Cost(), result[begin].cost.Cost())) {
      ++end;
    }
    std::stable_sort(result.begin() + begin, result.begin() + end,
                     [&](const Path &x, const Path &y) {
                       return LabelsLess(fst, x, y);
                     });
    begin = end;
  }
  if (result.size() > k) result.resize(k);
  return result;
}

std::optional<Path> BestPath(const Fst &fst) {
  auto paths = KBest(fst, 1);
  if (paths.empty()) return std::nullopt;
  return std::move(paths.front());
}

std::vector<std::string> Labels(const std::vector<Label> &ids,
                                const SymbolTable &table) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (Label l : ids) out.push_back(table.LabelOf(l));
  return out;
}

std::string JoinLabels(const std::vector<Label> &ids, const SymbolTable &table,
                       const std::string &sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += table.LabelOf(ids[i]);
  }
  return out;
}

}  // namespace translit

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

#include "oracles.h"

#include <cmath>
#include <functional>

namespace translit::oracle {

std::vector<EnumeratedPath> EnumeratePaths(const Fst &fst,
                                           std::size_t max_arcs) {
  std::vector<EnumeratedPath> out;
  if (fst.Start() == kNoState) return out;
  EnumeratedPath cur;
  std::function<void(StateId, std::size_t)> dfs = [&](StateId s,
                                                      std::size_t depth) {
    if (fst.IsFinal(s)) {
      EnumeratedPath done = cur;
      done.cost += fst.Final(s).Cost();
      out.push_back(std::move(done));
    }
    if (depth == max_arcs) return;
    for (const Arc &arc : fst.Arcs(s)) {
      const EnumeratedPath saved = cur;
      if (arc.ilabel != kEpsilon) cur.ilabels.push_back(arc.ilabel);
      if (arc.olabel != kEpsilon) cur.olabels.push_back(arc.olabel);
      cur.cost += arc.weight.Cost();
      dfs(arc.nextstate, depth + 1);
      cur = saved;
    }
  };
  dfs(fst.Start(), 0);
  return out;
}

std::vector<EnumeratedPath> EnumerateComposedPaths(const Fst &a, const Fst &b,
                                                   std::size_t max_arcs) {
  const auto pa = EnumeratePaths(a, max_arcs);
  const auto pb = EnumeratePaths(b, max_arcs);
  std::vector<EnumeratedPath> out;
  for (const auto &x : pa) {
    for (const auto &y : pb) {
      if (x.olabels != y.ilabels) continue;
      out.push_back({x.ilabels, y.olabels, x.cost + y.cost});
    }
  }
  return out;
}

Fst RandomFst(std::mt19937_64 &rng, const SymbolTablePtr &isyms,
              const SymbolTablePtr &osyms, const RandomFstOptions &opts) {
  std::uniform_int_distribution<int> nstates(1, opts.max_states);
  std::uniform_int_distribution<int> narcs(0, opts.max_arcs);
  std::uniform_real_distribution<double> cost(0.05, 2.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto label = [&](const SymbolTable &t) -> Label {
    if (coin(rng) < opts.epsilon_rate) return kEpsilon;
    std::uniform_int_distribution<Label> pick(1, static_cast<Label>(t.Size()) - 1);
    return pick(rng);
  };

  Fst fst(isyms, osyms);
  const int n = nstates(rng);
  for (int i = 0; i < n; ++i) fst.AddState();
  fst.SetStart(0);
  fst.SetFinal(n - 1, Weight(cost(rng)));
  for (int s = 0; s + 1 < n; ++s) {
    if (coin(rng) < 0.3) fst.SetFinal(s, Weight(cost(rng)));
  }
  const int m = narcs(rng);
  for (int i = 0; i < m; ++i) {
    int src, dst;
    if (opts.acyclic) {
      if (n < 2) break;
      std::uniform_int_distribution<int> pick_src(0, n - 2);
      src = pick_src(rng);
      std::uniform_int_distribution<int> pick_dst(src + 1, n - 1);
      dst = pick_dst(rng);
    } else {
      std::uniform_int_distribution<int> pick(0, n - 1);
      src = pick(rng);
      dst = pick(rng);
    }
    fst.AddArc(src, {label(*isyms), label(*osyms), Weight(cost(rng)), dst});
  }
  return fst;
}

std::vector<std::vector<std::size_t>> EnumerateAlignments(
    std::size_t m, std::size_t n, std::size_t max_span) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left_m,
                                                          std::size_t left_n) {
    if (left_m == 0) {
      if (left_n == 0) out.push_back(cur);
      return;
    }
    for (std::size_t len = 1; len <= left_n; ++len) {
      if (max_span != 0 && len > max_span) break;
      cur.push_back(len);
      rec(left_m - 1, left_n - len);
      cur.pop_back();
    }
  };
  rec(m, n);
  return out;
}

std::uint64_t CountAlignments(std::size_t m, std::size_t n,
                              std::size_t max_span) {
  if (m == 0) return n == 0 ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    if (max_span != 0 && len > max_span) break;
    total += CountAlignments(m - 1, n - len, max_span);
  }
  return total;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

EmTrace EnumerationEm(const SoundPairCorpus &corpus, std::size_t max_span,
                      std::size_t iterations) {
  struct Expanded {
    std::vector<std::vector<MappingKey>> alignments;
  };
  std::vector<Expanded> pairs;
  for (const auto &pair : corpus) {
    Expanded e;
    for (const auto &lens :
         EnumerateAlignments(pair.english.size(), pair.japanese.size(),
                             max_span)) {
      std::vector<MappingKey> keys;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < lens.size(); ++i) {
        keys.emplace_back(
            pair.english[i],
            std::vector<std::string>(pair.japanese.begin() + pos,
                                     pair.japanese.begin() + pos + lens[i]));
        pos += lens[i];
      }
      e.alignments.push_back(std::move(keys));
    }
    if (!e.alignments.empty()) pairs.push_back(std::move(e));
  }

  // Empty params stand for "every mapping has weight one".
  auto weight = [](const std::map<MappingKey, double> &params,
                   const std::vector<MappingKey> &keys) {
    double w = 1.0;
    for (const auto &k : keys) {
      if (!params.empty()) {
        auto it = params.find(k);
        w *= it == params.end() ? 0.0 : it->second;
      }
    }
    return w;
  };
  auto likelihood = [&](const std::map<MappingKey, double> &params) {
    double ll = 0.0;
    for (const auto &p : pairs) {
      double z = 0.0;
      for (const auto &a : p.alignments) z += weight(params, a);
      ll += std::log(z);
    }
    return ll;
  };

  EmTrace trace;
  for (std::size_t it = 0; it < iterations; ++it) {
    std::map<MappingKey, double> counts;
    for (const auto &p : pairs) {
      double z = 0.0;
      for (const auto &a : p.alignments) z += weight(trace.params, a);
      for (const auto &a : p.alignments) {
        const double post = weight(trace.params, a) / z;
        for (const auto &k : a) counts[k] += post;
      }
    }
    std::map<std::string, double> totals;
    for (const auto &[k, c] : counts) totals[k.first] += c;
    std::map<MappingKey, double> next;
    for (const auto &[k, c] : counts) next[k] = c / totals[k.first];
    trace.params = std::move(next);
    trace.log_likelihoods.push_back(likelihood(trace.params));
  }
  return trace;
}

}  // namespace translit::oracle

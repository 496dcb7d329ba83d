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

#include "translit/alignment.h"

#include <algorithm>
#include <limits>

namespace translit {

namespace {

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::size_t SpanLimit(std::size_t max_span, std::size_t n) {
  return max_span == kUnboundedSpan ? n : std::min(max_span, n);
}

}  // namespace

std::uint64_t AlignmentCount(std::span<const std::string> english,
                             std::span<const std::string> japanese,
                             std::size_t max_span) {
  const std::size_t m = english.size();
  const std::size_t n = japanese.size();
  if (m == 0 || n == 0) return m == n ? 1 : 0;
  const std::size_t span = SpanLimit(max_span, n);
  // ways[t]: alignments of the first i English sounds covering t sounds.
  std::vector<std::uint64_t> ways(n + 1, 0), next(n + 1, 0);
  ways[0] = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t t = 0; t < n; ++t) {
      if (!ways[t]) continue;
      for (std::size_t len = 1; len <= span && t + len <= n; ++len) {
        next[t + len] = SaturatingAdd(next[t + len], ways[t]);
      }
    }
    std::swap(ways, next);
  }
  return ways[n];
}

std::size_t MappingIndex::Intern(const MappingKey &key) {
  auto [it, inserted] = ids_.try_emplace(key, keys_.size());
  if (inserted) keys_.push_back(key);
  return it->second;
}

AlignmentLattice::AlignmentLattice(const SoundPair &pair, std::size_t max_span,
                                   MappingIndex &index)
    : m_(pair.english.size()), n_(pair.japanese.size()) {
  if (m_ == 0 || n_ == 0 || m_ > n_) return;
  const std::size_t span = SpanLimit(max_span, n_);
  // Reachability from the origin and to the corner (i = m, t = n).
  std::vector<std::vector<char>> fwd(m_ + 1, std::vector<char>(n_ + 1, 0));
  std::vector<std::vector<char>> bwd(m_ + 1, std::vector<char>(n_ + 1, 0));
  fwd[0][0] = 1;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t t = 0; t < n_; ++t) {
      if (!fwd[i][t]) continue;
      for (std::size_t len = 1; len <= span && t + len <= n_; ++len) {
        fwd[i + 1][t + len] = 1;
      }
    }
  }
  bwd[m_][n_] = 1;
  for (std::size_t i = m_; i-- > 0;) {
    for (std::size_t t = 0; t < n_; ++t) {
      for (std::size_t len = 1; len <= span && t + len <= n_; ++len) {
        if (bwd[i + 1][t + len]) {
          bwd[i][t] = 1;
          break;
        }
      }
    }
  }
  if (!bwd[0][0]) return;
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t t = 0; t < n_; ++t) {
      if (!fwd[i][t]) continue;
      for (std::size_t len = 1; len <= span && t + len <= n_; ++len) {
        if (!bwd[i + 1][t + len]) continue;
        MappingKey key{pair.english[i],
                       {pair.japanese.begin() + t,
                        pair.japanese.begin() + t + len}};
        edges_.push_back({i, t, t + len, index.Intern(key)});
      }
    }
  }
}

double AlignmentLattice::AccumulateCounts(std::span<const double> params,
                                          std::vector<double> &counts) const {
  if (edges_.empty()) return 0.0;
  std::vector<double> alpha((m_ + 1) * (n_ + 1), 0.0);
  std::vector<double> beta((m_ + 1) * (n_ + 1), 0.0);
  auto at = [this](std::size_t i, std::size_t t) { return i * (n_ + 1) + t; };
  alpha[at(0, 0)] = 1.0;
  for (const Edge &e : edges_) {
    alpha[at(e.from_i + 1, e.to_t)] += alpha[at(e.from_i, e.from_t)] * params[e.param];
  }
  beta[at(m_, n_)] = 1.0;
  for (auto it = edges_.rbegin(); it != edges_.rend(); ++it) {
    beta[at(it->from_i, it->from_t)] += params[it->param] * beta[at(it->from_i + 1, it->to_t)];
  }
  const double total = alpha[at(m_, n_)];
  if (!(total > 0.0)) return 0.0;
  for (const Edge &e : edges_) {
    counts[e.param] += alpha[at(e.from_i, e.from_t)] * params[e.param] *
                       beta[at(e.from_i + 1, e.to_t)] / total;
  }
  return total;
}

}  // namespace translit

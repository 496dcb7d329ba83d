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

#ifndef TRANSLIT_ALIGNMENT_H_
#define TRANSLIT_ALIGNMENT_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace translit {

// An English phoneme sequence paired with the Japanese sound sequence it was
// transliterated as.
struct SoundPair {
  std::vector<std::string> english;
  std::vector<std::string> japanese;
};

using SoundPairCorpus = std::vector<SoundPair>;

inline constexpr std::size_t kUnboundedSpan = 0;

// Number of monotone alignments giving each English sound a contiguous,
// non-empty run of 1..max_span Japanese sounds and covering all of them.
// max_span == kUnboundedSpan removes the cap, making the count
// C(n-1, m-1) for 1 <= m <= n. Saturates at UINT64_MAX.
std::uint64_t AlignmentCount(std::span<const std::string> english,
                             std::span<const std::string> japanese,
                             std::size_t max_span);

// (English phoneme, Japanese sound sequence).
using MappingKey = std::pair<std::string, std::vector<std::string>>;

// Dense ids for mapping keys, in first-registration order.
class MappingIndex {
 public:
  std::size_t Intern(const MappingKey &key);
  std::size_t Size() const { return keys_.size(); }
  const MappingKey &Key(std::size_t id) const { return keys_[id]; }

 private:
  std::map<MappingKey, std::size_t> ids_;
  std::vector<MappingKey> keys_;
};

// Dynamic-programming grid over positions (i, t): i English sounds consumed,
// t Japanese sounds covered. An edge (i, t) -> (i+1, t+len) maps English
// sound i to japanese[t, t+len). Only edges lying on at least one complete
// alignment are kept, and each is interned into the shared MappingIndex.
class AlignmentLattice {
 public:
  AlignmentLattice(const SoundPair &pair, std::size_t max_span,
                   MappingIndex &index);

  bool Alignable() const { return !edges_.empty(); }
  std::size_t NumEdges() const { return edges_.size(); }

  // Forward-backward under per-mapping probabilities `params` (indexed by
  // MappingIndex id). Adds each edge's posterior to counts[id] and returns
  // the summed probability of all alignments. Counts are untouched when that
  // sum is zero.
  double AccumulateCounts(std::span<const double> params,
                          std::vector<double> &counts) const;

 private:
  struct Edge {
    std::size_t from_i, from_t, to_t;
    std::size_t param;
  };

  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;  // sorted by from_i, then from_t
};

}  // namespace translit

#endif  // TRANSLIT_ALIGNMENT_H_

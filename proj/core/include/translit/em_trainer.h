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

#ifndef TRANSLIT_EM_TRAINER_H_
#define TRANSLIT_EM_TRAINER_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "translit/alignment.h"
#include "translit/resources.h"

namespace translit {

struct EmOptions {
  std::size_t max_span = 4;  // kUnboundedSpan for no cap
  std::size_t max_iters = 100;
  double tol = 1e-6;  // on the largest absolute probability change
};

struct EmResult {
  SoundMappingTable table;
  std::size_t iterations = 0;
  bool converged = false;
  // Corpus log-likelihood under the table after each iteration; the last
  // entry belongs to the returned table.
  std::vector<double> log_likelihoods;
  // Indices into the input corpus of pairs with no alignment.
  std::vector<std::size_t> skipped;
};

// Estimates P(japanese run | English phoneme) by EM over all monotone
// alignments of each pair. Iteration 1 weights every alignment of a pair
// equally; later iterations weight alignments by the product of their
// mapping probabilities. Expected counts come from forward-backward on each
// pair's AlignmentLattice. Pairs without alignments are skipped and
// reported on `diagnostics` when given.
//
// Throws TrainingError when no pair is alignable.
EmResult EmTrain(const SoundPairCorpus &corpus, const EmOptions &options,
                 std::ostream *diagnostics = nullptr);

}  // namespace translit

#endif  // TRANSLIT_EM_TRAINER_H_

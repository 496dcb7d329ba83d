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

#include "translit/em_trainer.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "translit/errors.h"
#include "translit/text_util.h"

namespace translit {

namespace {

// Normalizes counts within each English phoneme.
std::vector<double> Normalize(const MappingIndex &index,
                              const std::vector<double> &counts) {
  std::map<std::string, double> totals;
  for (std::size_t id = 0; id < index.Size(); ++id) {
    totals[index.Key(id).first] += counts[id];
  }
  std::vector<double> params(counts.size(), 0.0);
  for (std::size_t id = 0; id < index.Size(); ++id) {
    const double total = totals[index.Key(id).first];
    if (total > 0.0) params[id] = counts[id] / total;
  }
  return params;
}

}  // namespace

EmResult EmTrain(const SoundPairCorpus &corpus, const EmOptions &options,
                 std::ostream *diagnostics) {
  EmResult result;
  MappingIndex index;
  std::vector<AlignmentLattice> lattices;
  for (std::size_t p = 0; p < corpus.size(); ++p) {
    AlignmentLattice lattice(corpus[p], options.max_span, index);
    if (!lattice.Alignable()) {
      result.skipped.push_back(p);
      if (diagnostics) {
        *diagnostics << "skipped unalignable pair: (" << Join(corpus[p].english)
                     << ") <-> (" << Join(corpus[p].japanese) << ")\n";
      }
      continue;
    }
    lattices.push_back(std::move(lattice));
  }
  if (lattices.empty()) {
    std::string listing;
    for (std::size_t p : result.skipped) {
      listing += "\n  (" + Join(corpus[p].english) + ") <-> (" +
                 Join(corpus[p].japanese) + ")";
    }
    throw TrainingError("no alignable sound pairs; skipped:" + listing);
  }

  auto e_step = [&](const std::vector<double> &params, double &log_likelihood) {
    std::vector<double> counts(index.Size(), 0.0);
    log_likelihood = 0.0;
    for (const auto &lattice : lattices) {
      const double z = lattice.AccumulateCounts(params, counts);
      log_likelihood += z > 0.0 ? std::log(z)
                                : -std::numeric_limits<double>::infinity();
    }
    return counts;
  };

  // Unit parameters make every alignment of a pair equally likely.
  double ll = 0.0;
  std::vector<double> params =
      Normalize(index, e_step(std::vector<double>(index.Size(), 1.0), ll));
  result.iterations = 1;
  while (result.iterations < options.max_iters) {
    auto counts = e_step(params, ll);
    result.log_likelihoods.push_back(ll);
    auto next = Normalize(index, counts);
    double delta = 0.0;
    for (std::size_t id = 0; id < params.size(); ++id) {
      delta = std::max(delta, std::fabs(next[id] - params[id]));
    }
    params = std::move(next);
    ++result.iterations;
    if (delta < options.tol) {
      result.converged = true;
      break;
    }
  }
  e_step(params, ll);
  result.log_likelihoods.push_back(ll);

  for (std::size_t id = 0; id < index.Size(); ++id) {
    if (!(params[id] > 0.0)) continue;
    const auto &[e, j] = index.Key(id);
    result.table.rows[e].push_back({j, params[id]});
  }
  return result;
}

}  // namespace translit

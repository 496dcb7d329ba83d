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

#include "translit/decoder.h"

#include <algorithm>
#include <set>

#include "translit/errors.h"
#include "translit/fst_ops.h"
#include "translit/inventory.h"
#include "translit/shortest_path.h"
#include "translit/text_util.h"

namespace translit {

std::string Candidate::Text() const { return Join(words, " "); }

std::vector<std::string> ObservedGlyphs(const std::string &phrase) {
  auto glyphs = SplitKatakana(phrase);
  if (!glyphs) throw InputError("invalid UTF-8 in input");
  return *glyphs;
}

namespace {

struct StageLattices {
  Fst sounds;    // observed -> Japanese sounds
  Fst phonemes;  // observed -> English phonemes
  Fst words;     // observed -> English words
};

StageLattices RunStages(const std::vector<std::string> &observed,
                        const ModelSet &models, const DecodeOptions &opts) {
  Fst lattice = LinearAcceptor(
      observed, opts.use_ocr_model ? models.Observed() : models.Katakana());
  if (opts.use_ocr_model) lattice = Trim(Compose(lattice, models.OcrReader()));
  Fst sounds = Trim(Compose(lattice, models.KatakanaReader()));
  Fst phonemes = Trim(Compose(sounds, models.SoundUnmapper()));
  Fst words = Trim(Compose(phonemes, models.Unpronouncer()));
  return {std::move(sounds), std::move(phonemes), std::move(words)};
}

std::vector<std::string> SplitWords(const std::vector<Label> &labels,
                                    const SymbolTable &table) {
  std::vector<std::string> words;
  for (Label l : labels) {
    for (auto &w : SplitWhitespace(table.LabelOf(l))) words.push_back(w);
  }
  return words;
}

}  // namespace

Fst PhoneticCandidates(const std::vector<std::string> &observed,
                       const ModelSet &models, const DecodeOptions &opts) {
  return ProjectOutput(RunStages(observed, models, opts).words);
}

namespace {

std::vector<Candidate> Rescore(const Fst &lattice, const ModelSet &models,
                               const DecodeOptions &opts) {
  const Fst &prior = opts.name_mode ? models.NameModel() : models.WordModel();
  const Fst rescored = Compose(lattice, prior);
  KBestOptions kopts;
  kopts.unique_outputs = opts.dedupe_outputs;
  // Multiword symbols can render like a sequence of single words, so ask
  // for spare paths before merging by text.
  const std::size_t want = opts.dedupe_outputs ? 2 * opts.k + 4 : opts.k;
  std::vector<Candidate> out;
  std::set<std::vector<std::string>> seen;
  for (const Path &path : KBest(rescored, want, kopts)) {
    Candidate c;
    c.words = SplitWords(path.olabels, *rescored.OutputSymbols());
    if (opts.dedupe_outputs && !seen.insert(c.words).second) continue;
    c.cost = path.cost;
    c.probability = path.cost.Probability();
    out.push_back(std::move(c));
    if (out.size() == opts.k) break;
  }
  return out;
}

}  // namespace

std::vector<Candidate> BackTransliterate(
    const std::vector<std::string> &observed, const ModelSet &models,
    const DecodeOptions &opts) {
  if (opts.k == 0) return {};
  return Rescore(PhoneticCandidates(observed, models, opts), models, opts);
}

DecodeResult Decode(const std::vector<std::string> &observed,
                    const ModelSet &models, const DecodeOptions &opts) {
  DecodeResult result;
  auto stages = RunStages(observed, models, opts);
  if (opts.k > 0) {
    result.candidates = Rescore(ProjectOutput(stages.words), models, opts);
  }
  if (result.candidates.empty()) {
    DecodeFallback fb;
    if (auto j = BestPath(stages.sounds)) {
      fb.japanese_sounds = Labels(j->olabels, *models.Sounds());
    }
    if (auto e = BestPath(stages.phonemes)) {
      fb.english_phonemes = Labels(e->olabels, *models.Phonemes());
    }
    result.fallback = std::move(fb);
  }
  return result;
}

std::vector<std::string> TransliterateForward(
    const std::vector<std::string> &words, const ModelSet &models) {
  if (words.empty()) return {};
  Fst lattice = LinearAcceptor(words, models.Words());
  lattice = Trim(Compose(lattice, models.Pronouncer()));
  lattice = Trim(Compose(lattice, models.SoundMapper()));
  lattice = Trim(Compose(lattice, models.KatakanaWriter()));
  auto best = BestPath(lattice);
  if (!best) return {};
  return Labels(best->olabels, *models.Katakana());
}

}  // namespace translit

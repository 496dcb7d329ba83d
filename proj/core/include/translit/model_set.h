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

#ifndef TRANSLIT_MODEL_SET_H_
#define TRANSLIT_MODEL_SET_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>

#include "translit/fst.h"
#include "translit/resources.h"

namespace translit {

// Parsed resources for the whole cascade.
struct ModelResources {
  FrequencyList frequency;
  std::optional<FrequencyList> names;  // personal-name unigram list
  std::set<std::string> stoplist;
  PronunciationLexicon pronunciations;
  SoundMappingTable sound_map;
  KatakanaSpellingTable spelling;
  ConfusionTable confusion;
  // Keep only the most frequent words (0 = all).
  std::size_t lexicon_limit = 0;
  // When set, rescales every confusion row to this non-identity mass.
  std::optional<double> ocr_noise;
};

// The five distributions of the generative chain
//   words -> English phonemes -> Japanese sounds -> katakana -> observed
// plus the personal-name word model. Alphabets are shared objects, so
// adjacent machines agree by construction; the constructor verifies it.
// Inverted machines used for decoding are built once here.
class ModelSet {
 public:
  ModelSet(Fst word_model, Fst name_model, Fst pronouncer, Fst sound_mapper,
           Fst katakana_writer, Fst ocr_model);

  const Fst &WordModel() const { return word_model_; }
  const Fst &NameModel() const { return name_model_; }
  const Fst &Pronouncer() const { return pronouncer_; }
  const Fst &SoundMapper() const { return sound_mapper_; }
  const Fst &KatakanaWriter() const { return katakana_writer_; }
  const Fst &OcrModel() const { return ocr_model_; }

  // Reverse-direction machines.
  const Fst &OcrReader() const { return ocr_reader_; }
  const Fst &KatakanaReader() const { return katakana_reader_; }
  const Fst &SoundUnmapper() const { return sound_unmapper_; }
  const Fst &Unpronouncer() const { return unpronouncer_; }

  const SymbolTablePtr &Words() const { return pronouncer_.InputSymbols(); }
  const SymbolTablePtr &Phonemes() const { return pronouncer_.OutputSymbols(); }
  const SymbolTablePtr &Sounds() const { return sound_mapper_.OutputSymbols(); }
  const SymbolTablePtr &Katakana() const {
    return katakana_writer_.OutputSymbols();
  }
  const SymbolTablePtr &Observed() const { return ocr_model_.OutputSymbols(); }

 private:
  Fst word_model_;
  Fst name_model_;
  Fst pronouncer_;
  Fst sound_mapper_;
  Fst katakana_writer_;
  Fst ocr_model_;
  Fst ocr_reader_;
  Fst katakana_reader_;
  Fst sound_unmapper_;
  Fst unpronouncer_;
};

// Builds every model. The pronouncer covers the most frequent
// `lexicon_limit` words of the frequency list plus all names, keeping those
// with a pronunciation (multiword entries concatenate member
// pronunciations). Stoplisted words are removed from the word model only.
//
// Throws BuildError naming the chain boundary when one model produces a
// symbol the next cannot consume.
ModelSet BuildModelSet(const ModelResources &resources);

// Directory layout: <alphabet>.syms symbol tables and <model>.fst machines
// in the text FSM format.
void SaveModelSet(const ModelSet &models, const std::string &dir);
ModelSet LoadModelSet(const std::string &dir);
bool IsModelSetDir(const std::string &dir);

}  // namespace translit

#endif  // TRANSLIT_MODEL_SET_H_

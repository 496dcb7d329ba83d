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

#include "translit/model_set.h"

#include <filesystem>
#include <fstream>
#include <memory>
#include <set>

#include "translit/errors.h"
#include "translit/fst_io.h"
#include "translit/fst_ops.h"
#include "translit/inventory.h"
#include "translit/model_builders.h"

namespace translit {

namespace {

void CheckBoundary(const Fst &from, const Fst &to, const std::string &name) {
  if (from.OutputSymbols() != to.InputSymbols() &&
      !from.OutputSymbols()->SameSymbols(*to.InputSymbols())) {
    throw ContractError("alphabet mismatch at " + name + " boundary");
  }
}

}  // namespace

ModelSet::ModelSet(Fst word_model, Fst name_model, Fst pronouncer,
                   Fst sound_mapper, Fst katakana_writer, Fst ocr_model)
    : word_model_(std::move(word_model)),
      name_model_(std::move(name_model)),
      pronouncer_(std::move(pronouncer)),
      sound_mapper_(std::move(sound_mapper)),
      katakana_writer_(std::move(katakana_writer)),
      ocr_model_(std::move(ocr_model)),
      ocr_reader_(Invert(ocr_model_)),
      katakana_reader_(Invert(katakana_writer_)),
      sound_unmapper_(Invert(sound_mapper_)),
      unpronouncer_(Invert(pronouncer_)) {
  CheckBoundary(word_model_, pronouncer_, "word-model/pronouncer");
  CheckBoundary(name_model_, pronouncer_, "name-model/pronouncer");
  CheckBoundary(pronouncer_, sound_mapper_, "pronouncer/sound-mapper");
  CheckBoundary(sound_mapper_, katakana_writer_,
                "sound-mapper/katakana-writer");
  CheckBoundary(katakana_writer_, ocr_model_, "katakana-writer/ocr-model");
}

ModelSet BuildModelSet(const ModelResources &res) {
  const auto frequent = MostFrequentWords(res.frequency, res.lexicon_limit);
  std::vector<std::string> vocabulary = frequent;
  if (res.names) {
    for (const auto &[name, count] : res.names->entries) {
      vocabulary.push_back(name);
    }
  }

  PronunciationLexicon lexicon;
  for (const auto &word : vocabulary) {
    if (lexicon.entries.count(word)) continue;
    auto prons = res.pronunciations.Pronounce(word);
    if (!prons.empty()) lexicon.entries.emplace(word, std::move(prons));
  }
  if (lexicon.entries.empty()) {
    throw BuildError("no frequency-list word has a pronunciation");
  }

  std::set<std::string> all_words(vocabulary.begin(), vocabulary.end());
  auto words = MakeWordTable({all_words.begin(), all_words.end()});
  auto phonemes = MakeEnglishPhonemeTable();
  auto sounds = MakeJapaneseSoundTable();
  auto katakana = MakeKatakanaTable(res.spelling);
  const ConfusionTable confusion =
      res.ocr_noise ? WithNoiseMass(res.confusion, *res.ocr_noise)
                    : res.confusion;
  auto observed = MakeObservedTable(*katakana, confusion);

  // pronouncer -> sound mapper: every phoneme produced must be mappable.
  std::set<std::string> used{std::string(kEnglishPause)};
  for (const auto &[w, prons] : lexicon.entries) {
    for (const auto &p : prons) used.insert(p.begin(), p.end());
  }
  for (const auto &ph : used) {
    if (!res.sound_map.rows.count(ph)) {
      throw BuildError("pronouncer/sound-mapper boundary: phoneme '" + ph +
                       "' has no sound mapping");
    }
  }
  // sound mapper -> katakana writer: every sound produced must be spellable.
  std::set<std::string> spellable;
  for (const auto &e : res.spelling.entries) {
    spellable.insert(e.unit.begin(), e.unit.end());
  }
  for (const auto &[e, row] : res.sound_map.rows) {
    for (const auto &m : row) {
      for (const auto &j : m.japanese) {
        if (!spellable.count(j)) {
          throw BuildError("sound-mapper/katakana-writer boundary: sound '" +
                           j + "' has no spelling");
        }
      }
    }
  }

  auto word_model =
      BuildWordModel(MakeUnigramLexicon(res.frequency, res.stoplist,
                                        res.lexicon_limit),
                     words);
  auto name_model = res.names
                        ? BuildWordModel(MakeUnigramLexicon(*res.names, {}), words)
                        : word_model;
  return ModelSet(std::move(word_model), std::move(name_model),
                  BuildPronouncer(lexicon, words, phonemes),
                  BuildSoundMapper(res.sound_map, phonemes, sounds),
                  BuildKatakanaWriter(res.spelling, sounds, katakana),
                  BuildOcrModel(confusion, katakana, observed));
}

namespace {

namespace fs = std::filesystem;

constexpr const char *kSymbolFiles[] = {"words", "phonemes", "sounds",
                                        "katakana", "observed"};
constexpr const char *kModelFiles[] = {"word_model", "name_model",
                                       "pronouncer", "sound_mapper",
                                       "katakana_writer", "ocr_model"};

void WriteSymbols(const SymbolTable &table, const fs::path &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  table.WriteText(os);
}

SymbolTablePtr ReadSymbols(const fs::path &path, const std::string &name) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  return std::make_shared<SymbolTable>(
      SymbolTable::ReadText(is, name, path.string()));
}

}  // namespace

void SaveModelSet(const ModelSet &models, const std::string &dir) {
  fs::create_directories(dir);
  const fs::path root(dir);
  WriteSymbols(*models.Words(), root / "words.syms");
  WriteSymbols(*models.Phonemes(), root / "phonemes.syms");
  WriteSymbols(*models.Sounds(), root / "sounds.syms");
  WriteSymbols(*models.Katakana(), root / "katakana.syms");
  WriteSymbols(*models.Observed(), root / "observed.syms");
  WriteTextFile(models.WordModel(), (root / "word_model.fst").string());
  WriteTextFile(models.NameModel(), (root / "name_model.fst").string());
  WriteTextFile(models.Pronouncer(), (root / "pronouncer.fst").string());
  WriteTextFile(models.SoundMapper(), (root / "sound_mapper.fst").string());
  WriteTextFile(models.KatakanaWriter(),
                (root / "katakana_writer.fst").string());
  WriteTextFile(models.OcrModel(), (root / "ocr_model.fst").string());
}

bool IsModelSetDir(const std::string &dir) {
  const fs::path root(dir);
  for (const char *s : kSymbolFiles) {
    if (!fs::exists(root / (std::string(s) + ".syms"))) return false;
  }
  for (const char *m : kModelFiles) {
    if (!fs::exists(root / (std::string(m) + ".fst"))) return false;
  }
  return true;
}

ModelSet LoadModelSet(const std::string &dir) {
  const fs::path root(dir);
  auto words = ReadSymbols(root / "words.syms", "english-words");
  auto phonemes = ReadSymbols(root / "phonemes.syms", "english-phonemes");
  auto sounds = ReadSymbols(root / "sounds.syms", "japanese-sounds");
  auto katakana = ReadSymbols(root / "katakana.syms", "katakana");
  auto observed = ReadSymbols(root / "observed.syms", "observed-glyphs");
  auto load = [&](const char *name, const SymbolTablePtr &in,
                  const SymbolTablePtr &out) {
    return ReadTextFile((root / (std::string(name) + ".fst")).string(), in,
                        out);
  };
  return ModelSet(load("word_model", words, words),
                  load("name_model", words, words),
                  load("pronouncer", words, phonemes),
                  load("sound_mapper", phonemes, sounds),
                  load("katakana_writer", sounds, katakana),
                  load("ocr_model", katakana, observed));
}

}  // namespace translit

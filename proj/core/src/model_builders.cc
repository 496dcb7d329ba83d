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

#include "translit/model_builders.h"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <set>
#include <utility>

#include "translit/errors.h"
#include "translit/inventory.h"
#include "translit/text_util.h"

namespace translit {

namespace {

Label Require(const SymbolTable &table, const std::string &label,
              const std::string &context) {
  if (auto id = table.Find(label)) return *id;
  throw BuildError(context + ": '" + label + "' is not in alphabet " +
                   table.Name());
}

Weight CostOf(double p, const std::string &context) {
  if (!(p > 0.0)) {
    throw BuildError(context + ": probability must be positive");
  }
  return Weight::FromProbability(std::min(p, 1.0));
}

}  // namespace

SymbolTablePtr MakeWordTable(const std::vector<std::string> &words) {
  std::vector<std::string> sorted(words);
  std::sort(sorted.begin(), sorted.end());
  auto table = std::make_shared<SymbolTable>("english-words");
  for (const auto &w : sorted) table->AddSymbol(w);
  return table;
}

SymbolTablePtr MakeKatakanaTable(const KatakanaSpellingTable &spelling) {
  auto glyphs = spelling.Glyphs();
  glyphs.emplace_back(kDotSeparator);
  glyphs.emplace_back(kLongVowelMark);
  std::sort(glyphs.begin(), glyphs.end());
  auto table = std::make_shared<SymbolTable>("katakana");
  for (const auto &g : glyphs) table->AddSymbol(g);
  return table;
}

SymbolTablePtr MakeObservedTable(const SymbolTable &katakana,
                                 const ConfusionTable &confusion) {
  auto table = std::make_shared<SymbolTable>("observed-glyphs");
  for (std::size_t i = 1; i < katakana.Size(); ++i) {
    table->AddSymbol(katakana.LabelOf(static_cast<Label>(i)));
  }
  std::set<std::string> extra;
  for (const auto &[g, row] : confusion.rows) {
    for (const auto &[o, p] : row) extra.insert(o);
  }
  for (const auto &o : extra) table->AddSymbol(o);
  return table;
}

Fst BuildWordModel(const UnigramLexicon &lexicon, const SymbolTablePtr &words) {
  if (lexicon.empty()) throw BuildError("word model: empty lexicon");
  Fst fst(words, words);
  const StateId hub = fst.AddState();
  fst.SetStart(hub);
  fst.SetFinal(hub, Weight::One());
  for (const auto &[word, p] : lexicon.probabilities) {
    const Label l = Require(*words, word, "word model");
    fst.AddArc(hub, Arc{l, l, CostOf(p, "word model: " + word), hub});
  }
  return fst;
}

Fst BuildPronouncer(const PronunciationLexicon &lexicon,
                    const SymbolTablePtr &words,
                    const SymbolTablePtr &phonemes) {
  if (lexicon.entries.empty()) throw BuildError("pronouncer: empty lexicon");
  Fst fst(words, phonemes);
  const StateId hub = fst.AddState();
  const StateId boundary = fst.AddState();
  fst.SetStart(hub);
  fst.SetFinal(boundary, Weight::One());
  fst.AddArc(boundary, Arc{kEpsilon, kEpsilon, Weight::One(), hub});
  fst.AddArc(boundary, Arc{kEpsilon,
                           Require(*phonemes, std::string(kEnglishPause),
                                   "pronouncer"),
                           Weight::One(), hub});

  std::map<std::pair<StateId, Label>, StateId> tree;
  for (const auto &[word, prons] : lexicon.entries) {
    const Label w = Require(*words, word, "pronouncer");
    if (prons.empty()) {
      throw BuildError("pronouncer: word '" + word + "' has no pronunciation");
    }
    const Weight cost =
        Weight::FromProbability(1.0 / static_cast<double>(prons.size()));
    for (const auto &pron : prons) {
      if (pron.empty()) {
        throw BuildError("pronouncer: word '" + word +
                         "' has an empty pronunciation");
      }
      StateId node = hub;
      for (const auto &ph : pron) {
        if (!IsEnglishPhoneme(ph) || ph == kEnglishPause) {
          throw BuildError("pronouncer: word '" + word + "' uses phoneme '" +
                           ph + "' outside the inventory");
        }
        const Label p = Require(*phonemes, ph, "pronouncer");
        auto [it, inserted] = tree.try_emplace({node, p}, kNoState);
        if (inserted) {
          it->second = fst.AddState();
          fst.AddArc(node, Arc{kEpsilon, p, Weight::One(), it->second});
        }
        node = it->second;
      }
      fst.AddArc(node, Arc{w, kEpsilon, cost, boundary});
    }
  }
  return fst;
}

Fst BuildSoundMapper(const SoundMappingTable &table,
                     const SymbolTablePtr &phonemes,
                     const SymbolTablePtr &sounds) {
  Fst fst(phonemes, sounds);
  const StateId hub = fst.AddState();
  fst.SetStart(hub);
  fst.SetFinal(hub, Weight::One());
  for (auto phoneme : EnglishPhonemes()) {
    auto it = table.rows.find(std::string(phoneme));
    if (it == table.rows.end()) continue;
    const Label e = Require(*phonemes, it->first, "sound mapper");
    for (const auto &m : it->second) {
      const std::string what = "sound mapper: " + it->first + " -> " +
                               Join(m.japanese);
      if (m.japanese.empty()) throw BuildError(what + ": empty sequence");
      const Weight cost = CostOf(m.probability, what);
      StateId src = hub;
      for (std::size_t i = 0; i < m.japanese.size(); ++i) {
        const Label j = Require(*sounds, m.japanese[i], what);
        const bool last = i + 1 == m.japanese.size();
        const StateId dst = last ? hub : fst.AddState();
        fst.AddArc(src, Arc{i == 0 ? e : kEpsilon, j,
                            i == 0 ? cost : Weight::One(), dst});
        src = dst;
      }
    }
  }
  for (const auto &[e, row] : table.rows) {
    Require(*phonemes, e, "sound mapper");
  }
  return fst;
}

namespace {

enum Context : int { kStart = 0, kVowelA, kVowelI, kVowelU, kVowelE, kVowelO,
                     kAfterN, kNumContexts };

constexpr std::array<const char *, 5> kVowels = {"a", "i", "u", "e", "o"};

int VowelContext(const std::string &s) {
  for (int i = 0; i < 5; ++i) {
    if (s == kVowels[i]) return kVowelA + i;
  }
  return -1;
}

}  // namespace

Fst BuildKatakanaWriter(const KatakanaSpellingTable &spelling,
                        const SymbolTablePtr &sounds,
                        const SymbolTablePtr &katakana) {
  // Lone-vowel glyphs for <repeat>: the most probable spelling of "V".
  std::array<std::vector<std::string>, 5> vowel_glyphs;
  std::array<double, 5> vowel_best{};
  for (const auto &e : spelling.entries) {
    if (e.unit.size() != 1) continue;
    const int v = VowelContext(e.unit[0]);
    if (v < 0 || e.probability <= vowel_best[v - kVowelA]) continue;
    vowel_best[v - kVowelA] = e.probability;
    vowel_glyphs[v - kVowelA] = e.glyphs;
  }

  Fst fst(sounds, katakana);
  std::array<StateId, kNumContexts> context_state{};
  for (int c = 0; c < kNumContexts; ++c) {
    context_state[c] = fst.AddState();
    fst.SetFinal(context_state[c], Weight::One());
  }
  fst.SetStart(context_state[kStart]);

  std::map<std::pair<StateId, Label>, StateId> trie;
  auto step = [&](StateId node, Label sound) {
    auto [it, inserted] = trie.try_emplace({node, sound}, kNoState);
    if (inserted) {
      it->second = fst.AddState();
      fst.AddArc(node, Arc{sound, kEpsilon, Weight::One(), it->second});
    }
    return it->second;
  };
  auto emit = [&](StateId node, const std::vector<std::string> &glyphs,
                  Weight cost, StateId target, const std::string &what) {
    if (glyphs.empty()) {
      fst.AddArc(node, Arc{kEpsilon, kEpsilon, cost, target});
      return;
    }
    StateId src = node;
    for (std::size_t i = 0; i < glyphs.size(); ++i) {
      const Label g = Require(*katakana, glyphs[i], what);
      const StateId dst = i + 1 == glyphs.size() ? target : fst.AddState();
      fst.AddArc(src, Arc{kEpsilon, g, i == 0 ? cost : Weight::One(), dst});
      src = dst;
    }
  };

  for (int c = 0; c < kNumContexts; ++c) {
    for (const auto &e : spelling.entries) {
      const std::string what = "katakana writer: " + Join(e.unit);
      const Weight cost = CostOf(e.probability, what);
      if (e.unit.size() == 1 && e.unit[0] == kLongUnit) {
        if (c < kVowelA || c > kVowelO) continue;
        const Label v = Require(*sounds, kVowels[c - kVowelA], what);
        const auto &glyphs = e.repeat_vowel ? vowel_glyphs[c - kVowelA] : e.glyphs;
        emit(step(context_state[c], v), glyphs, cost, context_state[c], what);
        continue;
      }
      const std::string &first = e.unit.front();
      const std::string &last = e.unit.back();
      const int first_vowel = VowelContext(first);
      if (first_vowel >= 0 && (first_vowel == c || c == kAfterN)) continue;
      if (first == "y" && c == kAfterN) continue;
      if (first == kJapanesePause && c == kStart) continue;

      int target = kStart;
      if (const int v = VowelContext(last); v >= 0) {
        target = v;
      } else if (e.unit.size() == 1 && (last == "n" || last == "m")) {
        target = kAfterN;
      }
      StateId node = context_state[c];
      for (const auto &s : e.unit) node = step(node, Require(*sounds, s, what));
      emit(node, e.glyphs, cost, context_state[target], what);
    }
  }
  return fst;
}

Fst BuildOcrModel(const ConfusionTable &confusion,
                  const SymbolTablePtr &katakana,
                  const SymbolTablePtr &observed) {
  Fst fst(katakana, observed);
  const StateId s = fst.AddState();
  fst.SetStart(s);
  fst.SetFinal(s, Weight::One());
  for (std::size_t i = 1; i < katakana->Size(); ++i) {
    const auto &glyph = katakana->LabelOf(static_cast<Label>(i));
    auto it = confusion.rows.find(glyph);
    if (it == confusion.rows.end()) {
      const Label o = Require(*observed, glyph, "ocr model");
      fst.AddArc(s, Arc{static_cast<Label>(i), o, Weight::One(), s});
      continue;
    }
    for (const auto &[out, p] : it->second) {
      const Label o = Require(*observed, out, "ocr model");
      fst.AddArc(s, Arc{static_cast<Label>(i), o,
                        CostOf(p, "ocr model: " + glyph + " -> " + out), s});
    }
  }
  return fst;
}

}  // namespace translit

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

#ifndef TRANSLIT_MODEL_BUILDERS_H_
#define TRANSLIT_MODEL_BUILDERS_H_

#include <string>
#include <vector>

#include "translit/fst.h"
#include "translit/resources.h"

namespace translit {

// Symbol tables for the word and glyph alphabets. Labels are registered in
// sorted order so ids are reproducible.
SymbolTablePtr MakeWordTable(const std::vector<std::string> &words);
// Every glyph the spelling table can write, plus the dot separator and the
// long-vowel mark.
SymbolTablePtr MakeKatakanaTable(const KatakanaSpellingTable &spelling);
// The katakana alphabet followed by any extra glyph the confusion table
// can produce.
SymbolTablePtr MakeObservedTable(const SymbolTable &katakana,
                                 const ConfusionTable &confusion);

// Unigram acceptor: one hub state, final at cost 0, with a self-loop
// w:w / -ln P(w) per lexicon word. Throws BuildError on an empty lexicon or a
// word missing from `words`.
Fst BuildWordModel(const UnigramLexicon &lexicon, const SymbolTablePtr &words);

// Words -> English phonemes. Pronunciations form a phoneme tree rooted at
// the hub (shared prefixes merged); the word symbol is read on the leaf arc
// at cost -ln(1/#pronunciations). Between words an <eps>:PAUSE arc is
// optional, and PAUSE never starts, ends or repeats.
Fst BuildPronouncer(const PronunciationLexicon &lexicon,
                    const SymbolTablePtr &words,
                    const SymbolTablePtr &phonemes);

// English phonemes -> Japanese sounds, context independent: each table
// entry (e, j1..jk, p) is a hub cycle e:j1 / -ln p, <eps>:j2, ..., <eps>:jk.
Fst BuildSoundMapper(const SoundMappingTable &table,
                     const SymbolTablePtr &phonemes,
                     const SymbolTablePtr &sounds);

// Japanese sounds -> katakana glyphs. States track the writing context
// (start/after pause, last vowel, after syllabic n) so that
//   - a vowel repeating the previous vowel is written through <long>,
//   - vowel- or y-initial units cannot follow syllabic n,
//   - pause cannot start the string or follow another pause.
Fst BuildKatakanaWriter(const KatakanaSpellingTable &spelling,
                        const SymbolTablePtr &sounds,
                        const SymbolTablePtr &katakana);

// Katakana -> observed glyphs, one state. Glyphs without a confusion row are
// copied at cost 0.
Fst BuildOcrModel(const ConfusionTable &confusion,
                  const SymbolTablePtr &katakana,
                  const SymbolTablePtr &observed);

}  // namespace translit

#endif  // TRANSLIT_MODEL_BUILDERS_H_

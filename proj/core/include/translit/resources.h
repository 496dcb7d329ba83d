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

#ifndef TRANSLIT_RESOURCES_H_
#define TRANSLIT_RESOURCES_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace translit {

// Resource files are UTF-8 TSV; blank lines and lines starting with '#' are
// skipped. Every reader throws ParseError with the source and line number.
// Words are lowercased and whitespace-normalized on read.

// `word<TAB>count`, file order preserved.
struct FrequencyList {
  std::vector<std::pair<std::string, double>> entries;
};

// Word-to-probability map after stoplist removal, truncation to the most
// frequent `limit` entries, and normalization.
struct UnigramLexicon {
  std::map<std::string, double> probabilities;
  std::set<std::string> stoplist;

  bool empty() const { return probabilities.empty(); }
  // 0 for absent words.
  double Probability(const std::string &word) const;
};

// limit == 0 keeps every entry. Ties in count keep the earlier entry.
UnigramLexicon MakeUnigramLexicon(const FrequencyList &freq,
                                  const std::set<std::string> &stoplist,
                                  std::size_t limit = 0);

// The most frequent `limit` words of `freq` (all when limit == 0),
// ignoring any stoplist.
std::vector<std::string> MostFrequentWords(const FrequencyList &freq,
                                           std::size_t limit);

// `word<TAB>PH1 PH2 ...`; repeated words add alternative pronunciations.
struct PronunciationLexicon {
  std::map<std::string, std::vector<std::vector<std::string>>> entries;

  // Pronunciations of a word, or of a multiword phrase formed by
  // concatenating member pronunciations (at most `max_variants`).
  // Empty when some member is unknown.
  std::vector<std::vector<std::string>> Pronounce(
      const std::string &phrase, std::size_t max_variants = 16) const;
};

struct SoundMapping {
  std::vector<std::string> japanese;
  double probability = 0.0;
};

// English phoneme -> weighted Japanese sound sequences.
// `ePhoneme<TAB>j1 j2 ...<TAB>prob`.
struct SoundMappingTable {
  std::map<std::string, std::vector<SoundMapping>> rows;

  double RowMass(const std::string &phoneme) const;
  std::size_t MaxSpan() const;
};

// One spelling alternative of a Japanese sound unit.
// `soundUnit<TAB>glyphs<TAB>prob`, where soundUnit is space-separated sounds
// (or <long> for a repeated vowel), and glyphs is a katakana string,
// <eps> for an omitted unit, or <repeat> for the lone-vowel glyph.
struct SpellingEntry {
  std::vector<std::string> unit;
  std::vector<std::string> glyphs;  // one code point each
  bool repeat_vowel = false;
  double probability = 0.0;
};

inline constexpr const char *kLongUnit = "<long>";
inline constexpr const char *kRepeatGlyph = "<repeat>";

struct KatakanaSpellingTable {
  std::vector<SpellingEntry> entries;

  // Every glyph that can be written, sorted.
  std::vector<std::string> Glyphs() const;
};

// `glyph<TAB>observedGlyph<TAB>prob`.
struct ConfusionTable {
  std::map<std::string, std::vector<std::pair<std::string, double>>> rows;
};

// `englishPhrase<TAB>katakanaPhrase`.
struct GlossaryEntry {
  std::string english;
  std::string katakana;
};

FrequencyList ReadFrequencyList(std::istream &is, const std::string &source);
std::set<std::string> ReadStoplist(std::istream &is, const std::string &source);
PronunciationLexicon ReadPronunciationLexicon(std::istream &is,
                                              const std::string &source);
// Rows must use inventory symbols and sum to at most 1 (+1e-6 rounding).
SoundMappingTable ReadSoundMappingTable(std::istream &is,
                                        const std::string &source);
// Units must use inventory symbols; alternatives of a unit must sum to 1
// (+-1e-6) and every inventory sound must occur in some unit.
KatakanaSpellingTable ReadSpellingTable(std::istream &is,
                                        const std::string &source);
// Rows must sum to 1 (+-1e-6) and contain the identity entry.
ConfusionTable ReadConfusionTable(std::istream &is, const std::string &source);
std::vector<GlossaryEntry> ReadGlossary(std::istream &is,
                                        const std::string &source);

// Rows in inventory order, entries by decreasing probability, then
// sequence. Entries with probability < floor are dropped.
void WriteSoundMappingTable(const SoundMappingTable &table, std::ostream &os,
                            double floor = 0.0);

// Scales every row so that non-identity entries carry `noise` in total.
// Rows without confusions stay identity.
ConfusionTable WithNoiseMass(const ConfusionTable &table, double noise);

// Opens `path` and runs `reader(stream, path)`; missing files throw
// std::runtime_error naming the path.
template <typename Reader>
auto ReadResourceFile(const std::string &path, Reader &&reader);

}  // namespace translit

#include <fstream>
#include <stdexcept>

namespace translit {

template <typename Reader>
auto ReadResourceFile(const std::string &path, Reader &&reader) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  return reader(is, path);
}

}  // namespace translit

#endif  // TRANSLIT_RESOURCES_H_

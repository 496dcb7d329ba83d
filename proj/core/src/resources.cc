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

#include "translit/resources.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include "translit/errors.h"
#include "translit/inventory.h"
#include "translit/text_util.h"

namespace translit {

namespace {

constexpr double kSumSlack = 1e-6;

// Calls f(fields, lineno) for each non-comment line.
template <typename F>
void ForEachRecord(std::istream &is, const std::string &source,
                   std::size_t expected_fields, F &&f) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (IsBlankOrComment(line)) continue;
    auto fields = SplitTabs(line);
    if (expected_fields && fields.size() != expected_fields) {
      throw ParseError(source, lineno,
                       "expected " + std::to_string(expected_fields) +
                           " tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    for (auto &field : fields) field = std::string(StripWhitespace(field));
    f(fields, lineno);
  }
}

double ParseProbability(const std::string &field, const std::string &source,
                        std::size_t lineno) {
  double p = ParseDouble(field, source, lineno);
  if (!(p > 0.0) || p > 1.0 + kSumSlack) {
    throw ParseError(source, lineno,
                     "probability must be in (0, 1], got " + field);
  }
  return p;
}

}  // namespace

double UnigramLexicon::Probability(const std::string &word) const {
  auto it = probabilities.find(word);
  return it == probabilities.end() ? 0.0 : it->second;
}

namespace {

std::vector<std::size_t> ByDecreasingCount(const FrequencyList &freq) {
  std::vector<std::size_t> order(freq.entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return freq.entries[a].second > freq.entries[b].second;
  });
  return order;
}

}  // namespace

UnigramLexicon MakeUnigramLexicon(const FrequencyList &freq,
                                  const std::set<std::string> &stoplist,
                                  std::size_t limit) {
  UnigramLexicon lex;
  lex.stoplist = stoplist;
  double total = 0.0;
  for (std::size_t i : ByDecreasingCount(freq)) {
    const auto &[word, count] = freq.entries[i];
    if (stoplist.count(word) || lex.probabilities.count(word)) continue;
    if (limit && lex.probabilities.size() >= limit) break;
    lex.probabilities.emplace(word, count);
    total += count;
  }
  for (auto &[word, p] : lex.probabilities) p /= total;
  return lex;
}

std::vector<std::string> MostFrequentWords(const FrequencyList &freq,
                                           std::size_t limit) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t i : ByDecreasingCount(freq)) {
    if (limit && out.size() >= limit) break;
    if (seen.insert(freq.entries[i].first).second) {
      out.push_back(freq.entries[i].first);
    }
  }
  return out;
}

std::vector<std::vector<std::string>> PronunciationLexicon::Pronounce(
    const std::string &phrase, std::size_t max_variants) const {
  if (auto it = entries.find(phrase); it != entries.end()) return it->second;
  auto words = SplitWhitespace(phrase);
  if (words.size() < 2) return {};
  std::vector<std::vector<std::string>> acc{{}};
  for (const auto &w : words) {
    auto it = entries.find(w);
    if (it == entries.end()) return {};
    std::vector<std::vector<std::string>> next;
    for (const auto &prefix : acc) {
      for (const auto &pron : it->second) {
        if (next.size() >= max_variants) break;
        auto joined = prefix;
        joined.insert(joined.end(), pron.begin(), pron.end());
        next.push_back(std::move(joined));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

double SoundMappingTable::RowMass(const std::string &phoneme) const {
  auto it = rows.find(phoneme);
  if (it == rows.end()) return 0.0;
  double mass = 0.0;
  for (const auto &m : it->second) mass += m.probability;
  return mass;
}

std::size_t SoundMappingTable::MaxSpan() const {
  std::size_t span = 0;
  for (const auto &[e, row] : rows) {
    for (const auto &m : row) span = std::max(span, m.japanese.size());
  }
  return span;
}

std::vector<std::string> KatakanaSpellingTable::Glyphs() const {
  std::set<std::string> glyphs;
  for (const auto &e : entries) glyphs.insert(e.glyphs.begin(), e.glyphs.end());
  return {glyphs.begin(), glyphs.end()};
}

FrequencyList ReadFrequencyList(std::istream &is, const std::string &source) {
  FrequencyList freq;
  ForEachRecord(is, source, 2, [&](const auto &f, std::size_t lineno) {
    auto word = NormalizeWords(f[0]);
    if (word.empty()) throw ParseError(source, lineno, "empty word");
    double count = ParseDouble(f[1], source, lineno);
    if (!(count > 0.0) || !std::isfinite(count)) {
      throw ParseError(source, lineno, "count must be positive");
    }
    freq.entries.emplace_back(std::move(word), count);
  });
  return freq;
}

std::set<std::string> ReadStoplist(std::istream &is, const std::string &source) {
  std::set<std::string> words;
  ForEachRecord(is, source, 0, [&](const auto &f, std::size_t lineno) {
    if (f.size() != 1) throw ParseError(source, lineno, "one word per line");
    words.insert(NormalizeWords(f[0]));
  });
  return words;
}

PronunciationLexicon ReadPronunciationLexicon(std::istream &is,
                                              const std::string &source) {
  PronunciationLexicon lex;
  ForEachRecord(is, source, 2, [&](const auto &f, std::size_t lineno) {
    auto word = NormalizeWords(f[0]);
    auto phonemes = SplitWhitespace(f[1]);
    if (word.empty() || phonemes.empty()) {
      throw ParseError(source, lineno, "empty word or pronunciation");
    }
    for (const auto &ph : phonemes) {
      if (!IsEnglishPhoneme(ph) || ph == kEnglishPause) {
        throw ParseError(source, lineno,
                         "word '" + word + "': phoneme '" + ph +
                             "' is not in the English inventory");
      }
    }
    auto &prons = lex.entries[word];
    if (std::find(prons.begin(), prons.end(), phonemes) == prons.end()) {
      prons.push_back(std::move(phonemes));
    }
  });
  return lex;
}

SoundMappingTable ReadSoundMappingTable(std::istream &is,
                                        const std::string &source) {
  SoundMappingTable table;
  ForEachRecord(is, source, 3, [&](const auto &f, std::size_t lineno) {
    if (!IsEnglishPhoneme(f[0])) {
      throw ParseError(source, lineno,
                       "'" + f[0] + "' is not an English phoneme");
    }
    auto seq = SplitWhitespace(f[1]);
    if (seq.empty()) throw ParseError(source, lineno, "empty sound sequence");
    for (const auto &j : seq) {
      if (!IsJapaneseSound(j)) {
        throw ParseError(source, lineno,
                         "'" + j + "' is not a Japanese sound");
      }
    }
    auto &row = table.rows[f[0]];
    for (const auto &m : row) {
      if (m.japanese == seq) {
        throw ParseError(source, lineno, "duplicate mapping " + f[0] + " -> " +
                                             f[1]);
      }
    }
    row.push_back({std::move(seq), ParseProbability(f[2], source, lineno)});
  });
  for (const auto &[e, row] : table.rows) {
    if (table.RowMass(e) > 1.0 + kSumSlack) {
      throw ParseError(source, 0, "row " + e + " sums to more than 1");
    }
  }
  return table;
}

KatakanaSpellingTable ReadSpellingTable(std::istream &is,
                                        const std::string &source) {
  KatakanaSpellingTable table;
  std::map<std::string, double> mass;
  ForEachRecord(is, source, 3, [&](const auto &f, std::size_t lineno) {
    SpellingEntry e;
    if (f[0] == kLongUnit) {
      e.unit = {kLongUnit};
    } else {
      e.unit = SplitWhitespace(f[0]);
      if (e.unit.empty()) throw ParseError(source, lineno, "empty sound unit");
      for (const auto &s : e.unit) {
        if (!IsJapaneseSound(s)) {
          throw ParseError(source, lineno,
                           "'" + s + "' is not a Japanese sound");
        }
      }
    }
    if (f[1] == kRepeatGlyph) {
      if (f[0] != kLongUnit) {
        throw ParseError(source, lineno, "<repeat> is only valid for <long>");
      }
      e.repeat_vowel = true;
    } else if (f[1] != kEpsilonString) {
      auto glyphs = SplitUtf8(f[1]);
      if (!glyphs || glyphs->empty()) {
        throw ParseError(source, lineno, "invalid glyph string");
      }
      e.glyphs = std::move(*glyphs);
    }
    e.probability = ParseProbability(f[2], source, lineno);
    mass[Join(e.unit)] += e.probability;
    table.entries.push_back(std::move(e));
  });
  for (const auto &[unit, m] : mass) {
    if (std::fabs(m - 1.0) > kSumSlack) {
      throw ParseError(source, 0,
                       "spelling alternatives of '" + unit + "' sum to " +
                           FormatDouble(m, 9) + ", expected 1");
    }
  }
  for (auto s : JapaneseSounds()) {
    bool found = false;
    for (const auto &e : table.entries) {
      if (std::find(e.unit.begin(), e.unit.end(), s) != e.unit.end()) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw ParseError(source, 0,
                       "no spelling covers sound '" + std::string(s) + "'");
    }
  }
  return table;
}

ConfusionTable ReadConfusionTable(std::istream &is, const std::string &source) {
  ConfusionTable table;
  ForEachRecord(is, source, 3, [&](const auto &f, std::size_t lineno) {
    auto a = SplitUtf8(f[0]);
    auto b = SplitUtf8(f[1]);
    if (!a || a->size() != 1 || !b || b->size() != 1) {
      throw ParseError(source, lineno, "expected single glyphs");
    }
    table.rows[f[0]].emplace_back(f[1], ParseProbability(f[2], source, lineno));
  });
  for (const auto &[g, row] : table.rows) {
    double m = 0.0;
    bool identity = false;
    for (const auto &[o, p] : row) {
      m += p;
      identity |= (o == g);
    }
    if (!identity) {
      throw ParseError(source, 0, "row " + g + " lacks the identity entry");
    }
    if (std::fabs(m - 1.0) > kSumSlack) {
      throw ParseError(source, 0, "row " + g + " does not sum to 1");
    }
  }
  return table;
}

std::vector<GlossaryEntry> ReadGlossary(std::istream &is,
                                        const std::string &source) {
  std::vector<GlossaryEntry> out;
  ForEachRecord(is, source, 2, [&](const auto &f, std::size_t lineno) {
    if (!SplitUtf8(f[1])) {
      throw ParseError(source, lineno, "invalid UTF-8 in katakana field");
    }
    out.push_back({NormalizeWords(f[0]), f[1]});
  });
  return out;
}

void WriteSoundMappingTable(const SoundMappingTable &table, std::ostream &os,
                            double floor) {
  for (auto e : EnglishPhonemes()) {
    auto it = table.rows.find(std::string(e));
    if (it == table.rows.end()) continue;
    auto row = it->second;
    std::stable_sort(row.begin(), row.end(), [](const auto &a, const auto &b) {
      if (a.probability != b.probability) return a.probability > b.probability;
      return a.japanese < b.japanese;
    });
    for (const auto &m : row) {
      if (m.probability < floor) continue;
      os << e << '\t' << Join(m.japanese) << '\t'
         << FormatDouble(m.probability, 9) << '\n';
    }
  }
}

ConfusionTable WithNoiseMass(const ConfusionTable &table, double noise) {
  if (noise < 0.0 || noise >= 1.0) {
    throw std::invalid_argument("noise mass must be in [0, 1)");
  }
  ConfusionTable out;
  for (const auto &[g, row] : table.rows) {
    double other = 0.0;
    for (const auto &[o, p] : row) {
      if (o != g) other += p;
    }
    auto &dst = out.rows[g];
    if (other == 0.0 || noise == 0.0) {
      dst.emplace_back(g, 1.0);
      continue;
    }
    for (const auto &[o, p] : row) {
      dst.emplace_back(o, o == g ? 1.0 - noise : noise * p / other);
    }
  }
  return out;
}

}  // namespace translit

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

#include "translit/inventory.h"

#include <algorithm>
#include <array>
#include <memory>

#include "translit/text_util.h"

namespace translit {

namespace {

constexpr std::array<std::string_view, 40> kEnglish = {
    // vowels
    "AA", "AE", "AH", "AO", "AW", "AY", "EH", "EY", "IH", "IY", "OW", "OY",
    "UH", "UW",
    // consonants
    "B", "CH", "D", "DH", "ER", "F", "G", "HH", "JH", "K", "L", "M", "N",
    "NG", "P", "R", "S", "SH", "T", "TH", "V", "W", "Y", "Z", "ZH",
    // special
    "PAUSE"};

constexpr std::array<std::string_view, 39> kJapanese = {
    "a", "i", "u", "e", "o",
    "b", "ch", "d", "f", "g", "h", "j", "k", "m", "n", "p", "r", "s", "sh",
    "t", "ts", "v", "w", "y", "z",
    "bb", "dd", "ff", "gg", "hh", "jj", "kk", "pp", "ss", "ssh", "tch", "tt",
    "zz",
    "pause"};

bool Contains(std::span<const std::string_view> set, std::string_view s) {
  return std::find(set.begin(), set.end(), s) != set.end();
}

SymbolTablePtr MakeTable(std::string name,
                         std::span<const std::string_view> symbols) {
  auto table = std::make_shared<SymbolTable>(std::move(name));
  for (auto s : symbols) table->AddSymbol(s);
  return table;
}

}  // namespace

std::span<const std::string_view> EnglishPhonemes() { return kEnglish; }
std::span<const std::string_view> EnglishVowels() {
  return std::span<const std::string_view>(kEnglish).first(14);
}

std::span<const std::string_view> JapaneseSounds() { return kJapanese; }
std::span<const std::string_view> JapaneseVowels() {
  return std::span<const std::string_view>(kJapanese).first(5);
}
std::span<const std::string_view> JapaneseGeminates() {
  return std::span<const std::string_view>(kJapanese).subspan(25, 13);
}

bool IsEnglishPhoneme(std::string_view s) { return Contains(kEnglish, s); }
bool IsJapaneseSound(std::string_view s) { return Contains(kJapanese, s); }
bool IsJapaneseVowel(std::string_view s) {
  return Contains(JapaneseVowels(), s);
}
bool IsJapaneseGeminate(std::string_view s) {
  return Contains(JapaneseGeminates(), s);
}

std::optional<std::vector<std::string>> SplitKatakana(std::string_view phrase) {
  auto glyphs = SplitUtf8(phrase);
  if (!glyphs) return std::nullopt;
  std::vector<std::string> out;
  out.reserve(glyphs->size());
  for (auto &g : *glyphs) {
    if (g == " " || g == "\t" || g == "\r" || g == "\n" || g == "\u3000") continue;
    if (g == "\u00B7" || g == "\u2022" || g == "\uFF65") {
      out.emplace_back(kDotSeparator);
    } else if (g == "\uFF70") {
      out.emplace_back(kLongVowelMark);
    } else {
      out.push_back(std::move(g));
    }
  }
  return out;
}

SymbolTablePtr MakeEnglishPhonemeTable() {
  return MakeTable("english-phonemes", kEnglish);
}
SymbolTablePtr MakeJapaneseSoundTable() {
  return MakeTable("japanese-sounds", kJapanese);
}

}  // namespace translit

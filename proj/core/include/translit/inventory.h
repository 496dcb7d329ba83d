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

#ifndef TRANSLIT_INVENTORY_H_
#define TRANSLIT_INVENTORY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "translit/fst.h"

namespace translit {

inline constexpr std::string_view kEnglishPause = "PAUSE";
inline constexpr std::string_view kJapanesePause = "pause";
inline constexpr std::string_view kDotSeparator = "・";
inline constexpr std::string_view kLongVowelMark = "ー";

// Stress-free CMU phonemes: 14 vowels, 25 consonants (ER counted as an
// r-coloured consonant), plus PAUSE. 40 symbols.
std::span<const std::string_view> EnglishPhonemes();
std::span<const std::string_view> EnglishVowels();

// 5 vowels, 33 consonants (20 plain + 13 geminate), plus pause.
// Long vowels are two symbols ("a a").
std::span<const std::string_view> JapaneseSounds();
std::span<const std::string_view> JapaneseVowels();
std::span<const std::string_view> JapaneseGeminates();

bool IsEnglishPhoneme(std::string_view s);
bool IsJapaneseSound(std::string_view s);
bool IsJapaneseVowel(std::string_view s);
bool IsJapaneseGeminate(std::string_view s);

// Splits a katakana phrase into glyphs. Whitespace is dropped and the
// separator variants U+00B7, U+2022 and U+FF65 are folded into U+30FB.
// nullopt on malformed UTF-8.
// The half-width prolonged mark U+FF70 becomes U+30FC.
// TODO: fold the remaining half-width katakana (U+FF66..U+FF9F) into
// full-width forms, composing voiced-mark pairs.
std::optional<std::vector<std::string>> SplitKatakana(std::string_view phrase);

// Fresh tables with the inventory pre-registered in inventory order.
SymbolTablePtr MakeEnglishPhonemeTable();
SymbolTablePtr MakeJapaneseSoundTable();

}  // namespace translit

#endif  // TRANSLIT_INVENTORY_H_

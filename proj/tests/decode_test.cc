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

#include <algorithm>
#include <set>

#include "desk.h"
#include "doctest.h"
#include "translit/decoder.h"
#include "translit/errors.h"
#include "translit/fst_ops.h"
#include "translit/inventory.h"
#include "translit/shortest_path.h"
#include "translit/text_util.h"

namespace translit {
namespace {

std::vector<Candidate> Top(const std::string &katakana, std::size_t k = 1,
                           bool names = false, bool ocr = false) {
  DecodeOptions opts;
  opts.k = k;
  opts.name_mode = names;
  opts.use_ocr_model = ocr;
  return BackTransliterate(ObservedGlyphs(katakana), desk::Models(), opts);
}

std::string Best(const std::string &katakana, bool names = false,
                 bool ocr = false) {
  const auto c = Top(katakana, 1, names, ocr);
  return c.empty() ? "" : c.front().Text();
}

TEST_CASE("desk phrases decode to their English sources") {
  CHECK(Best("アースデー") == "earth day");
  CHECK(Best("ロバート・ショーン・レナード") == "robert sean leonard");
  CHECK(Best("マスターズトーナメント") == "masters tournament");
  CHECK(Best("アイスクリーム") == "ice cream");
  CHECK(Best("ニューヨーク・タイムズ") == "new york times");
}

TEST_CASE("name mode decodes personal names") {
  CHECK(Best("ロバート・ショーン・レナード", true) == "robert sean leonard");
  CHECK(Best("アンジラ・ジョンソン", true) == "angela johnson");
}

TEST_CASE("k-best candidates are distinct and ordered") {
  const auto c = Top("ゴルフボール", 5);
  REQUIRE(c.size() == 5);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(seen.insert(c[i].Text()).second);
    CHECK(c[i].probability > 0.0);
    CHECK(c[i].probability == doctest::Approx(c[i].cost.Probability()));
    if (i > 0) CHECK(c[i].probability <= c[i - 1].probability);
  }
  CHECK(c[0].Text() == "golf ball");
}

TEST_CASE("word-model rescoring changes the phonetic favourite") {
  const auto observed = ObservedGlyphs("マスターズトーナメント");
  const Fst lattice = PhoneticCandidates(observed, desk::Models(), {});
  const auto &words = *lattice.OutputSymbols();
  const auto phonetic = KBest(lattice, 200, {.unique_outputs = true});
  REQUIRE_FALSE(phonetic.empty());
  const std::string before = JoinLabels(phonetic[0].olabels, words);
  const std::string after = Best("マスターズトーナメント");
  CHECK(before != after);
  bool present = false;
  for (const auto &p : phonetic) present |= JoinLabels(p.olabels, words) == after;
  CHECK(present);
}

TEST_CASE("ocr mode reads through a confused glyph") {
  // Large ヨ in place of the small one.
  CHECK(Best("ロバート・シヨーン・レナード", false, true) ==
        "robert sean leonard");
  // 力 (a kanji) for カ only exists in the observed alphabet.
  CHECK_THROWS_AS(Top("力メラ"), InputError);
  CHECK(Best("力メラ", false, true) == "camera");
}

TEST_CASE("separators are optional for the decoder") {
  CHECK(Best("ロバートショーンレナード") == "robert sean leonard");
  CHECK(Best("ニューヨークタイムズ") == "new york times");
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(ObservedGlyphs("\xe3\x82"), InputError);
  CHECK_THROWS_AS(Top("漢字"), InputError);
  CHECK(Top("").empty());
}

TEST_CASE("undecodable input reports a phonetic fallback") {
  const auto r = Decode(ObservedGlyphs("チョコレートケーキ"), desk::Models(), {});
  CHECK(r.candidates.empty());
  REQUIRE(r.fallback);
  CHECK(Join(r.fallback->japanese_sounds) == "ch o k o r e e t o k e e k i");
  CHECK_FALSE(r.fallback->english_phonemes.empty());

  const auto ok = Decode(ObservedGlyphs("ホテル"), desk::Models(), {});
  CHECK_FALSE(ok.fallback);
  REQUIRE(ok.candidates.size() == 1);
}

TEST_CASE("forward transliteration spells loanwords") {
  const auto &m = desk::Models();
  // AO prefers a short o, so the most probable spelling drops the ー.
  CHECK(Join(TransliterateForward({"golf", "ball"}, m), "") == "ゴルフボル");
  CHECK(Join(TransliterateForward({"earth", "day"}, m), "") == "アースデー");
  CHECK_THROWS_AS(TransliterateForward({"zzyzx"}, m), InputError);
}

TEST_CASE("forward then backward recovers lexicon words") {
  const auto &m = desk::Models();
  const std::vector<std::string> words{
      "hotel", "tennis", "camera", "soccer", "golf", "computer", "cheese",
      "juice", "orange", "pizza", "taxi", "engine", "hockey", "radio",
      "video", "data", "club", "party", "market", "london"};
  for (const auto &w : words) {
    const auto katakana = Join(TransliterateForward({w}, m), "");
    const auto cands = Top(katakana, 5);
    bool found = false;
    for (const auto &c : cands) found |= c.Text() == w;
    CHECK_MESSAGE(found, w << " -> " << katakana);
  }
}

}  // namespace
}  // namespace translit

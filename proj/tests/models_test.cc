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

#include <cmath>
#include <set>
#include <sstream>

#include "desk.h"
#include "doctest.h"
#include "translit/errors.h"
#include "translit/fst_ops.h"
#include "translit/inventory.h"
#include "translit/model_builders.h"
#include "translit/resources.h"
#include "translit/shortest_path.h"
#include "translit/text_util.h"

namespace translit {
namespace {

// Best spelling of a sound sequence and its probability.
std::pair<std::string, double> Spell(const std::string &sounds) {
  const Fst &writer = desk::Models().KatakanaWriter();
  const auto seq = SplitWhitespace(sounds);
  const auto best =
      BestPath(Compose(LinearAcceptor(seq, writer.InputSymbols()), writer));
  if (!best) return {"", 0.0};
  return {JoinLabels(best->olabels, *writer.OutputSymbols(), ""),
          best->cost.Probability()};
}

double SoundMapProbability(const std::string &phonemes,
                           const std::string &sounds) {
  const Fst &mapper = desk::Models().SoundMapper();
  const auto e = SplitWhitespace(phonemes);
  const auto j = SplitWhitespace(sounds);
  const Fst pair =
      Compose(Compose(LinearAcceptor(e, mapper.InputSymbols()), mapper),
              LinearAcceptor(j, mapper.OutputSymbols()));
  const auto best = BestPath(pair);
  return best ? best->cost.Probability() : 0.0;
}

template <typename Reader>
auto ParseText(const std::string &text, Reader reader) {
  std::istringstream is(text);
  return reader(is, "inline.tsv");
}

TEST_CASE("inventories have the documented sizes") {
  CHECK(EnglishPhonemes().size() == 40);
  CHECK(EnglishVowels().size() == 14);
  CHECK(JapaneseSounds().size() == 39);
  CHECK(JapaneseVowels().size() == 5);
  CHECK(JapaneseGeminates().size() == 13);
  CHECK(IsEnglishPhoneme("ER"));
  CHECK_FALSE(IsEnglishPhoneme("AH0"));
  CHECK(IsJapaneseGeminate("ssh"));
  CHECK_FALSE(IsJapaneseGeminate("sh"));
  CHECK(MakeEnglishPhonemeTable()->Size() == 41);
}

TEST_CASE("katakana splitting folds separator variants") {
  const auto g = SplitKatakana("ロバート･ショーン · レナード");
  REQUIRE(g);
  CHECK(g->size() == 14);
  CHECK((*g)[4] == "・");
  CHECK((*g)[9] == "・");
  CHECK(SplitKatakana("ｰ")->front() == "ー");
  CHECK_FALSE(SplitKatakana("\xe3\x82"));
}

TEST_CASE("sound-mapping reader validates rows") {
  CHECK_NOTHROW(ParseText("L\tr\t0.6\nL\tr u\t0.4\n", ReadSoundMappingTable));
  CHECK_THROWS_AS(ParseText("L\tr\t0.7\nL\tr u\t0.4\n", ReadSoundMappingTable),
                  ParseError);
  CHECK_THROWS_AS(ParseText("XX\tr\t0.5\n", ReadSoundMappingTable), ParseError);
  CHECK_THROWS_AS(ParseText("L\tqq\t0.5\n", ReadSoundMappingTable), ParseError);
  try {
    ParseText("L\tr\t0.5\nL\tr\tnope\n", ReadSoundMappingTable);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("the bundled sound map has every phoneme row") {
  const auto &table = desk::Resources().sound_map;
  CHECK(table.rows.size() == 40);
  std::size_t entries = 0;
  for (const auto &[e, row] : table.rows) {
    entries += row.size();
    CHECK(table.RowMass(e) <= 1.0 + 1e-9);
    CHECK(table.RowMass(e) > 0.9);
  }
  CHECK(entries == 180);
  CHECK(table.MaxSpan() == 4);
}

TEST_CASE("sound mapper realizes the documented alignment") {
  // S -> s, AA -> a, K -> kk, ER -> a a
  const double want = 0.269 * 0.382 * 0.043 * 0.719;
  CHECK(std::fabs(SoundMapProbability("S AA K ER", "s a kk a a") - want) <
        1e-12);
  CHECK(SoundMapProbability("L", "z") == 0.0);
}

TEST_CASE("writer spells long vowels and syllabic n") {
  CHECK(Spell("k a a").first == "カー");
  CHECK(Spell("k a a").second == doctest::Approx(0.9));
  CHECK(Spell("r o b a a t o").first == "ロバート");
  CHECK(Spell("m a s u t a a z u").first == "マスターズ");
  CHECK(Spell("sh o o n").first == "ショーン");
  CHECK(Spell("n a").first == "ナ");
  CHECK(Spell("b a kk u").first == "バック");
  CHECK(Spell("k a pause k a").first == "カ・カ");
  // A vowel after syllabic n is unreachable, which keeps n a unambiguous.
  const Fst &writer = desk::Models().KatakanaWriter();
  const Fst reader = Invert(writer);
  const auto glyphs = *SplitKatakana("コナ");
  const auto read = BestPath(
      Compose(LinearAcceptor(glyphs, reader.InputSymbols()), reader));
  REQUIRE(read);
  CHECK(JoinLabels(read->olabels, *reader.OutputSymbols()) == "k o n a");
}

TEST_CASE("writer rejects a leading pause") {
  CHECK(Spell("pause k a").first.empty());
}

TEST_CASE("pronouncer gives each variant an equal share") {
  const Fst &p = desk::Models().Pronouncer();
  const auto &words = *p.InputSymbols();
  const std::vector<std::string> w{"tomato"};
  CHECK_THROWS_AS(LinearAcceptor(w, p.InputSymbols()), InputError);

  const auto &lexicon = desk::Resources().pronunciations;
  std::string two;
  for (const auto &[word, prons] : lexicon.entries) {
    if (prons.size() == 2 && words.Contains(word)) {
      two = word;
      break;
    }
  }
  REQUIRE_FALSE(two.empty());
  const std::vector<std::string> seq{two};
  const auto paths = KBest(Compose(LinearAcceptor(seq, p.InputSymbols()), p), 4);
  REQUIRE(paths.size() >= 2);
  CHECK(paths[0].cost.Probability() == doctest::Approx(0.5));
  CHECK(paths[1].cost.Probability() == doctest::Approx(0.5));
}

TEST_CASE("pronouncer joins words with an optional pause") {
  const Fst &p = desk::Models().Pronouncer();
  const std::vector<std::string> seq{"earth", "day"};
  const auto paths =
      KBest(Compose(LinearAcceptor(seq, p.InputSymbols()), p), 10);
  std::set<std::string> outs;
  for (const auto &path : paths) {
    outs.insert(JoinLabels(path.olabels, *p.OutputSymbols()));
  }
  CHECK(outs.count("ER TH D EY"));
  CHECK(outs.count("ER TH PAUSE D EY"));
}

TEST_CASE("word model follows the frequency list") {
  const auto &res = desk::Resources();
  const auto lex = MakeUnigramLexicon(res.frequency, res.stoplist);
  double total = 0.0;
  for (const auto &[w, p] : lex.probabilities) total += p;
  CHECK(total == doctest::Approx(1.0));
  CHECK(lex.Probability("has") == 0.0);
  CHECK(lex.Probability("earth") > 0.0);

  const auto limited = MakeUnigramLexicon(res.frequency, res.stoplist, 10);
  CHECK(limited.probabilities.size() == 10);
}

TEST_CASE("stoplist removes exactly its listed words from the word model") {
  auto res = desk::Resources();
  std::set<std::string> listed;
  for (const auto &[w, c] : res.frequency.entries) {
    if (res.stoplist.count(w)) listed.insert(w);
  }
  REQUIRE_FALSE(listed.empty());
  const auto with = BuildModelSet(res);
  res.stoplist.clear();
  const auto without = BuildModelSet(res);
  CHECK(without.WordModel().NumArcs() - with.WordModel().NumArcs() ==
        listed.size());
}

TEST_CASE("ocr model passes through glyphs without a confusion row") {
  const auto &m = desk::Models();
  const Fst &ocr = m.OcrModel();
  const std::vector<std::string> glyphs{"ヌ"};
  const auto paths =
      KBest(Compose(LinearAcceptor(glyphs, ocr.InputSymbols()), ocr), 5);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].cost.Cost() == 0.0);

  const std::vector<std::string> confusable{"カ"};
  const auto alts =
      KBest(Compose(LinearAcceptor(confusable, ocr.InputSymbols()), ocr), 5);
  REQUIRE(alts.size() == 2);
  CHECK(alts[0].cost.Probability() == doctest::Approx(0.93));
  CHECK(JoinLabels(alts[1].olabels, *ocr.OutputSymbols()) == "力");
}

TEST_CASE("build reports the failing boundary") {
  auto res = desk::Resources();
  res.sound_map.rows.erase("L");
  CHECK_THROWS_WITH_AS(BuildModelSet(res),
                       doctest::Contains("pronouncer/sound-mapper"),
                       BuildError);

  res = desk::Resources();
  std::erase_if(res.spelling.entries, [](const SpellingEntry &e) {
    return std::find(e.unit.begin(), e.unit.end(), "kk") != e.unit.end();
  });
  CHECK_THROWS_WITH_AS(BuildModelSet(res),
                       doctest::Contains("sound-mapper/katakana-writer"),
                       BuildError);
}

TEST_CASE("builders reject bad probabilities") {
  SoundMappingTable table;
  table.rows["L"] = {{{"r"}, 0.0}};
  CHECK_THROWS_AS(
      BuildSoundMapper(table, MakeEnglishPhonemeTable(), MakeJapaneseSoundTable()),
      BuildError);
}

TEST_CASE("resource readers report line numbers") {
  try {
    ParseText("# c\nearth\t10\nday\tmany\n", ReadFrequencyList);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
    CHECK(e.source() == "inline.tsv");
  }
  CHECK_THROWS_AS(ParseText("earth\tER ZZ\n", ReadPronunciationLexicon),
                  ParseError);
  CHECK_THROWS_AS(ParseText("ア\tア\t0.5\n", ReadConfusionTable), ParseError);
  CHECK_THROWS_AS(ParseText("ア\tァ\t1\n", ReadConfusionTable), ParseError);
  CHECK_THROWS_AS(ParseText("soccer\n", ReadGlossary), ParseError);
}

}  // namespace
}  // namespace translit

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

#include "translit/bootstrap.h"

#include <algorithm>
#include <optional>
#include <ostream>

#include "translit/errors.h"
#include "translit/fst_ops.h"
#include "translit/inventory.h"
#include "translit/shortest_path.h"
#include "translit/text_util.h"

namespace translit {

namespace {

std::optional<std::vector<std::string>> Pronounce(
    const std::vector<std::string> &words, bool pauses, const Fst &pronouncer,
    std::string &why) {
  std::vector<std::string> phonemes;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto id = pronouncer.InputSymbols()->Find(words[i]);
    if (!id) {
      why = "out-of-lexicon word '" + words[i] + "'";
      return std::nullopt;
    }
    const Label word[] = {*id};
    auto best = BestPath(Compose(LinearAcceptor(word, pronouncer.InputSymbols()),
                                 pronouncer));
    if (!best) {
      why = "no pronunciation for '" + words[i] + "'";
      return std::nullopt;
    }
    if (i > 0 && pauses) phonemes.emplace_back(kEnglishPause);
    for (const auto &ph : Labels(best->olabels, *pronouncer.OutputSymbols())) {
      phonemes.push_back(ph);
    }
  }
  return phonemes;
}

}  // namespace

BootstrapResult BootstrapCorpus(const std::vector<GlossaryEntry> &glossary,
                                const Fst &pronouncer,
                                const Fst &katakana_writer,
                                std::ostream *diagnostics) {
  BootstrapResult result;
  const Fst reader = Invert(katakana_writer);
  for (std::size_t idx = 0; idx < glossary.size(); ++idx) {
    const auto &entry = glossary[idx];
    auto drop = [&](const std::string &why) {
      result.dropped.push_back(idx);
      if (diagnostics) {
        *diagnostics << "dropped glossary entry '" << entry.english << "' / '"
                     << entry.katakana << "': " << why << "\n";
      }
    };

    auto glyphs = SplitKatakana(entry.katakana);
    if (!glyphs || glyphs->empty()) {
      drop("invalid katakana");
      continue;
    }
    const bool separated =
        std::find(glyphs->begin(), glyphs->end(), kDotSeparator) !=
        glyphs->end();

    std::string why;
    auto english = Pronounce(SplitWhitespace(entry.english), separated,
                             pronouncer, why);
    if (!english || english->empty()) {
      drop(why.empty() ? "empty English phrase" : why);
      continue;
    }

    std::optional<Path> reading;
    try {
      reading = BestPath(
          Compose(LinearAcceptor(*glyphs, reader.InputSymbols()), reader));
    } catch (const InputError &e) {
      drop(e.what());
      continue;
    }
    if (!reading) {
      drop("katakana has no sound reading");
      continue;
    }
    result.corpus.push_back(
        {std::move(*english), Labels(reading->olabels, *reader.OutputSymbols())});
  }
  if (result.corpus.empty()) {
    throw TrainingError("glossary produced no sound pairs");
  }
  return result;
}

}  // namespace translit

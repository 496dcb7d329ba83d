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

#ifndef TRANSLIT_BOOTSTRAP_H_
#define TRANSLIT_BOOTSTRAP_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "translit/alignment.h"
#include "translit/fst.h"
#include "translit/resources.h"

namespace translit {

struct BootstrapResult {
  SoundPairCorpus corpus;
  // Indices of glossary entries that could not be converted.
  std::vector<std::size_t> dropped;
};

// Turns glossary entries into sound pairs. The English side is the
// best-path pronunciation of each word through `pronouncer`, joined with
// PAUSE when the katakana side contains a dot separator. The Japanese side
// is the best-path reading of the katakana through the inverted
// `katakana_writer`. Entries with an unknown word or glyph, or without a
// reading, are dropped and reported on `diagnostics`.
//
// Throws TrainingError when nothing converts.
BootstrapResult BootstrapCorpus(const std::vector<GlossaryEntry> &glossary,
                                const Fst &pronouncer,
                                const Fst &katakana_writer,
                                std::ostream *diagnostics = nullptr);

}  // namespace translit

#endif  // TRANSLIT_BOOTSTRAP_H_

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

#ifndef TRANSLIT_DECODER_H_
#define TRANSLIT_DECODER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "translit/fst.h"
#include "translit/model_set.h"

namespace translit {

struct DecodeOptions {
  std::size_t k = 1;
  bool use_ocr_model = false;  // input is in the observed-glyph alphabet
  bool name_mode = false;      // rescore with the personal-name model
  bool dedupe_outputs = true;  // one candidate per English word sequence
};

struct Candidate {
  std::vector<std::string> words;
  double probability = 0.0;  // exp(-cost)
  Weight cost;

  std::string Text() const;
};

// Best readings at the sound and phoneme stages, reported when no English
// word sequence explains the input.
struct DecodeFallback {
  std::vector<std::string> japanese_sounds;
  std::vector<std::string> english_phonemes;
};

struct DecodeResult {
  std::vector<Candidate> candidates;
  std::optional<DecodeFallback> fallback;
};

// Splits a katakana phrase into glyphs; InputError on malformed UTF-8.
std::vector<std::string> ObservedGlyphs(const std::string &phrase);

// Word-level acceptor of every English word sequence that could have
// produced `observed`, without the word model: the observed string is
// composed in turn with the inverted OCR model (if enabled), katakana
// writer, sound mapper and pronouncer, trimming after each stage. The
// result is empty when no analysis exists. InputError names a glyph outside
// the input alphabet.
Fst PhoneticCandidates(const std::vector<std::string> &observed,
                       const ModelSet &models, const DecodeOptions &opts);

// PhoneticCandidates rescored by composition with the word model (or name
// model), then the k best paths as candidates, best first.
std::vector<Candidate> BackTransliterate(
    const std::vector<std::string> &observed, const ModelSet &models,
    const DecodeOptions &opts);

// BackTransliterate plus the fallback diagnostic when nothing decodes.
DecodeResult Decode(const std::vector<std::string> &observed,
                    const ModelSet &models, const DecodeOptions &opts);

// Best-path katakana for an English word sequence through the generative
// chain words -> phonemes -> sounds -> katakana. InputError on an unknown
// word; empty input gives empty output.
std::vector<std::string> TransliterateForward(
    const std::vector<std::string> &words, const ModelSet &models);

}  // namespace translit

#endif  // TRANSLIT_DECODER_H_

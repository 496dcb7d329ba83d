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

#ifndef TRANSLIT_TOOLS_COMMANDS_H_
#define TRANSLIT_TOOLS_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "translit/decoder.h"
#include "translit/model_set.h"

namespace translit::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kResourceError = 2 };

// Usage or configuration problem (exit code 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON configuration. Relative paths resolve against the config file's
// directory. Unset optional paths are empty.
struct PipelineConfig {
  std::string frequency;
  std::string names;
  std::string stoplist;
  std::string pronunciations;
  std::string sound_map;
  std::string spelling;
  std::string confusion;
  std::string glossary;
  std::string model_dir;  // prebuilt models for decode/eval, output of build
  std::string table_out;  // output of train

  std::size_t lexicon_limit = 0;
  std::size_t max_span = 4;
  std::size_t em_iters = 100;
  double em_tol = 1e-6;
  double prune_floor = 0.0;
  std::optional<double> ocr_noise;

  DecodeOptions decode;
};

PipelineConfig LoadConfig(const std::string &path);

ModelResources LoadResources(const PipelineConfig &config);
// Prebuilt models from model_dir when present, otherwise built from the
// resources.
ModelSet LoadModels(const PipelineConfig &config);

// Bootstraps sound pairs from the glossary, runs EM and writes the table to
// `out_path`. Progress and a summary go to `log`.
int CmdTrain(const PipelineConfig &config, const std::string &out_path,
             std::ostream &log);

// Writes the serialized ModelSet to `out_dir`.
int CmdBuild(const PipelineConfig &config, const std::string &out_dir,
             std::ostream &log);

// One result block per input line:
//   rank<TAB>probability<TAB>english words
// or `0<TAB>0<TAB><no-analysis>` followed by a `# fallback` comment line.
// Malformed lines produce a `# error:` line and decoding continues.
int CmdDecode(const ModelSet &models, const DecodeOptions &opts,
              std::istream &in, std::ostream &out);

std::string DecodeLine(const ModelSet &models, const DecodeOptions &opts,
                       const std::string &line, bool &ok);

struct EvalItem {
  std::string katakana;
  std::string reference;
  std::string top1;  // empty when nothing decoded
  bool top1_correct = false;
  bool topk_correct = false;
};

struct EvalReport {
  std::size_t total = 0;
  std::size_t top1_correct = 0;
  std::size_t topk_correct = 0;
  double top1_accuracy = 0.0;
  double topk_accuracy = 0.0;
  std::vector<EvalItem> items;
};

struct TestItem {
  std::string katakana;
  std::string reference;
};

std::vector<TestItem> ReadTestSet(const std::string &path);

// Case-insensitive, whitespace-normalized exact match of the reference
// against the top-1 and the top-k candidates.
EvalReport Evaluate(const ModelSet &models, const std::vector<TestItem> &items,
                    const DecodeOptions &opts);

// Drops every dot separator.
std::string StripSeparators(const std::string &katakana);

// Replaces each glyph, with probability `rate`, by one of its confusion
// alternatives (proportional to their probabilities). Deterministic for a
// given seed.
std::vector<TestItem> CorruptItems(const std::vector<TestItem> &items,
                                   const ConfusionTable &confusion,
                                   double rate, std::uint64_t seed);

struct EvalOptions {
  bool strip_separators = false;
  std::optional<double> noise_rate;
  std::uint64_t seed = 1;
};

// Clean run, plus the separator-stripped and OCR-corrupted runs when
// requested. Prints per-item verdicts and summaries.
int CmdEval(const PipelineConfig &config, const ModelSet &models,
            const std::string &testset, const EvalOptions &options,
            std::ostream &out);

void PrintReport(const std::string &run, const EvalReport &report,
                 std::ostream &out);

}  // namespace translit::cli

#endif  // TRANSLIT_TOOLS_COMMANDS_H_

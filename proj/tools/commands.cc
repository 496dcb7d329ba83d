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

#include "commands.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <type_traits>

#include "json.hpp"

#include "translit/bootstrap.h"
#include "translit/em_trainer.h"
#include "translit/errors.h"
#include "translit/fst_io.h"
#include "translit/inventory.h"
#include "translit/model_builders.h"
#include "translit/text_util.h"

namespace translit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string ResolvePath(const fs::path &base, const json &value,
                        const std::string &key) {
  if (!value.is_string()) throw ConfigError("'" + key + "' must be a string");
  fs::path p = value.get<std::string>();
  if (p.empty()) return {};
  if (p.is_relative()) p = base / p;
  return p.lexically_normal().string();
}

template <typename T>
T GetNumber(const json &value, const std::string &key) {
  if (!value.is_number()) throw ConfigError("'" + key + "' must be a number");
  if constexpr (std::is_integral_v<T>) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
      throw ConfigError("'" + key + "' must be a non-negative integer");
    }
  }
  return value.get<T>();
}

bool GetBool(const json &value, const std::string &key) {
  if (!value.is_boolean()) throw ConfigError("'" + key + "' must be a boolean");
  return value.get<bool>();
}

const std::string &Require(const std::string &path, const char *key) {
  if (path.empty()) {
    throw ConfigError(std::string("configuration lacks '") + key + "'");
  }
  return path;
}

std::string FormatProbability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", p);
  return buf;
}

}  // namespace

PipelineConfig LoadConfig(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot read config " + path);
  json doc;
  try {
    doc = json::parse(is);
  } catch (const json::parse_error &e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config " + path + " is not an object");

  const fs::path base = fs::path(path).parent_path();
  PipelineConfig c;
  for (const auto &[key, value] : doc.items()) {
    if (key == "frequency") c.frequency = ResolvePath(base, value, key);
    else if (key == "names") c.names = ResolvePath(base, value, key);
    else if (key == "stoplist") c.stoplist = ResolvePath(base, value, key);
    else if (key == "pronunciations") c.pronunciations = ResolvePath(base, value, key);
    else if (key == "sound_map") c.sound_map = ResolvePath(base, value, key);
    else if (key == "spelling") c.spelling = ResolvePath(base, value, key);
    else if (key == "confusion") c.confusion = ResolvePath(base, value, key);
    else if (key == "glossary") c.glossary = ResolvePath(base, value, key);
    else if (key == "model_dir") c.model_dir = ResolvePath(base, value, key);
    else if (key == "table_out") c.table_out = ResolvePath(base, value, key);
    else if (key == "lexicon_limit") c.lexicon_limit = GetNumber<std::size_t>(value, key);
    else if (key == "max_span") c.max_span = GetNumber<std::size_t>(value, key);
    else if (key == "em_iters") c.em_iters = GetNumber<std::size_t>(value, key);
    else if (key == "em_tol") c.em_tol = GetNumber<double>(value, key);
    else if (key == "prune_floor") c.prune_floor = GetNumber<double>(value, key);
    else if (key == "ocr_noise") {
      if (!value.is_null()) c.ocr_noise = GetNumber<double>(value, key);
    } else if (key == "k") c.decode.k = GetNumber<std::size_t>(value, key);
    else if (key == "names_mode") c.decode.name_mode = GetBool(value, key);
    else if (key == "ocr") c.decode.use_ocr_model = GetBool(value, key);
    else throw ConfigError("config " + path + ": unknown key '" + key + "'");
  }
  if (c.decode.k == 0) throw ConfigError("'k' must be positive");
  if (c.em_iters == 0) throw ConfigError("'em_iters' must be positive");
  if (!(c.em_tol > 0.0)) throw ConfigError("'em_tol' must be positive");
  if (c.prune_floor < 0.0 || c.prune_floor >= 1.0) {
    throw ConfigError("'prune_floor' must be in [0, 1)");
  }
  if (c.ocr_noise && (*c.ocr_noise < 0.0 || *c.ocr_noise >= 1.0)) {
    throw ConfigError("'ocr_noise' must be in [0, 1)");
  }
  return c;
}

ModelResources LoadResources(const PipelineConfig &c) {
  ModelResources r;
  r.frequency = ReadResourceFile(Require(c.frequency, "frequency"),
                                 ReadFrequencyList);
  if (!c.names.empty()) r.names = ReadResourceFile(c.names, ReadFrequencyList);
  if (!c.stoplist.empty()) r.stoplist = ReadResourceFile(c.stoplist, ReadStoplist);
  r.pronunciations = ReadResourceFile(Require(c.pronunciations, "pronunciations"),
                                      ReadPronunciationLexicon);
  r.sound_map = ReadResourceFile(Require(c.sound_map, "sound_map"),
                                 ReadSoundMappingTable);
  r.spelling = ReadResourceFile(Require(c.spelling, "spelling"),
                                ReadSpellingTable);
  r.confusion = ReadResourceFile(Require(c.confusion, "confusion"),
                                 ReadConfusionTable);
  r.lexicon_limit = c.lexicon_limit;
  r.ocr_noise = c.ocr_noise;
  return r;
}

ModelSet LoadModels(const PipelineConfig &config) {
  if (!config.model_dir.empty() && IsModelSetDir(config.model_dir)) {
    return LoadModelSet(config.model_dir);
  }
  return BuildModelSet(LoadResources(config));
}

int CmdTrain(const PipelineConfig &c, const std::string &out_path,
             std::ostream &log) {
  if (out_path.empty()) throw ConfigError("no output path for the trained table");
  const auto glossary =
      ReadResourceFile(Require(c.glossary, "glossary"), ReadGlossary);
  const auto lexicon = ReadResourceFile(
      Require(c.pronunciations, "pronunciations"), ReadPronunciationLexicon);
  const auto spelling =
      ReadResourceFile(Require(c.spelling, "spelling"), ReadSpellingTable);

  std::vector<std::string> words;
  for (const auto &[word, prons] : lexicon.entries) words.push_back(word);
  for (const auto &entry : glossary) {
    // Multiword glossary phrases may be listed as a single lexicon entry.
    for (const auto &w : SplitWhitespace(entry.english)) words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::erase_if(words, [&](const std::string &w) {
    return lexicon.Pronounce(w).empty();
  });
  const auto word_syms = MakeWordTable(words);
  const auto sounds = MakeJapaneseSoundTable();
  const Fst pronouncer =
      BuildPronouncer(lexicon, word_syms, MakeEnglishPhonemeTable());
  const Fst writer =
      BuildKatakanaWriter(spelling, sounds, MakeKatakanaTable(spelling));

  const auto boot = BootstrapCorpus(glossary, pronouncer, writer, &log);
  EmOptions opts;
  opts.max_span = c.max_span;
  opts.max_iters = c.em_iters;
  opts.tol = c.em_tol;
  const auto result = EmTrain(boot.corpus, opts, &log);

  {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    WriteSoundMappingTable(result.table, os, c.prune_floor);
    if (!os) throw std::runtime_error("error writing " + out_path);
  }

  log << "pairs\t" << boot.corpus.size() << "\n";
  log << "skipped\t" << boot.dropped.size() + result.skipped.size() << "\n";
  log << "iterations\t" << result.iterations << "\n";
  log << "converged\t" << (result.converged ? "yes" : "no") << "\n";
  if (!result.log_likelihoods.empty()) {
    log << "log_likelihood\t" << FormatDouble(result.log_likelihoods.back(), 10)
        << "\n";
  }
  log << "wrote\t" << out_path << "\n";
  return kOk;
}

int CmdBuild(const PipelineConfig &c, const std::string &out_dir,
             std::ostream &log) {
  if (out_dir.empty()) throw ConfigError("no output directory for the models");
  const ModelSet models = BuildModelSet(LoadResources(c));
  SaveModelSet(models, out_dir);
  log << "words\t" << models.Words()->Size() - 1 << "\n";
  log << "wrote\t" << out_dir << "\n";
  return kOk;
}

std::string DecodeLine(const ModelSet &models, const DecodeOptions &opts,
                       const std::string &line, bool &ok) {
  std::string out;
  ok = true;
  try {
    const auto result = Decode(ObservedGlyphs(line), models, opts);
    if (result.candidates.empty()) {
      out += "0\t0\t<no-analysis>\n";
      if (result.fallback) {
        out += "# fallback\tjapanese: " +
               Join(result.fallback->japanese_sounds, " ") +
               "\tenglish: " + Join(result.fallback->english_phonemes, " ") +
               "\n";
      }
      return out;
    }
    for (std::size_t i = 0; i < result.candidates.size(); ++i) {
      const auto &cand = result.candidates[i];
      out += std::to_string(i + 1) + "\t" + FormatProbability(cand.probability) +
             "\t" + cand.Text() + "\n";
    }
  } catch (const InputError &e) {
    ok = false;
    out = std::string("# error: ") + e.what() + "\n";
  }
  return out;
}

int CmdDecode(const ModelSet &models, const DecodeOptions &opts,
              std::istream &in, std::ostream &out) {
  std::string line;
  std::size_t lines = 0, failures = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (StripWhitespace(line).empty()) continue;
    ++lines;
    bool ok = true;
    out << DecodeLine(models, opts, line, ok);
    if (!ok) ++failures;
  }
  out.flush();
  return lines > 0 && failures == lines ? kResourceError : kOk;
}

std::vector<TestItem> ReadTestSet(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot read " + path);
  std::vector<TestItem> items;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlankOrComment(line)) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(path, lineno, "expected katakana<TAB>reference");
    }
    items.push_back({std::string(StripWhitespace(fields[0])),
                     std::string(StripWhitespace(fields[1]))});
  }
  if (items.empty()) throw std::runtime_error("test set " + path + " is empty");
  return items;
}

EvalReport Evaluate(const ModelSet &models, const std::vector<TestItem> &items,
                    const DecodeOptions &opts) {
  EvalReport report;
  for (const auto &item : items) {
    EvalItem e{item.katakana, item.reference, {}, false, false};
    const std::string want = NormalizeWords(item.reference);
    try {
      const auto cands = BackTransliterate(ObservedGlyphs(item.katakana),
                                           models, opts);
      if (!cands.empty()) e.top1 = cands.front().Text();
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (NormalizeWords(cands[i].Text()) == want) {
          e.topk_correct = true;
          if (i == 0) e.top1_correct = true;
          break;
        }
      }
    } catch (const InputError &) {
      // Undecodable input counts as a miss.
    }
    report.top1_correct += e.top1_correct;
    report.topk_correct += e.topk_correct;
    report.items.push_back(std::move(e));
  }
  report.total = items.size();
  if (report.total > 0) {
    report.top1_accuracy =
        static_cast<double>(report.top1_correct) / report.total;
    report.topk_accuracy =
        static_cast<double>(report.topk_correct) / report.total;
  }
  return report;
}

std::string StripSeparators(const std::string &katakana) {
  const auto glyphs = SplitKatakana(katakana);
  if (!glyphs) return katakana;
  std::string out;
  for (const auto &g : *glyphs) {
    if (g != kDotSeparator) out += g;
  }
  return out;
}

std::vector<TestItem> CorruptItems(const std::vector<TestItem> &items,
                                   const ConfusionTable &confusion,
                                   double rate, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<TestItem> out;
  out.reserve(items.size());
  for (const auto &item : items) {
    const auto glyphs = SplitKatakana(item.katakana);
    if (!glyphs) {
      out.push_back(item);
      continue;
    }
    std::string noisy;
    for (const auto &g : *glyphs) {
      // Draw for every glyph so the stream does not depend on the table.
      const double draw = uniform(rng);
      const double pick = uniform(rng);
      auto row = confusion.rows.find(g);
      if (draw >= rate || row == confusion.rows.end()) {
        noisy += g;
        continue;
      }
      std::vector<std::pair<std::string, double>> alts;
      double mass = 0.0;
      for (const auto &[seen, p] : row->second) {
        if (seen != g && p > 0.0) {
          alts.emplace_back(seen, p);
          mass += p;
        }
      }
      if (alts.empty()) {
        noisy += g;
        continue;
      }
      double acc = 0.0;
      std::string chosen = alts.back().first;
      for (const auto &[seen, p] : alts) {
        acc += p / mass;
        if (pick < acc) {
          chosen = seen;
          break;
        }
      }
      noisy += chosen;
    }
    out.push_back({std::move(noisy), item.reference});
  }
  return out;
}

void PrintReport(const std::string &run, const EvalReport &report,
                 std::ostream &out) {
  out << "# run\t" << run << "\n";
  for (const auto &item : report.items) {
    const char *verdict = item.top1_correct   ? "correct"
                          : item.topk_correct ? "in-top-k"
                                              : "wrong";
    out << verdict << "\t" << item.katakana << "\t" << item.reference << "\t"
        << (item.top1.empty() ? "<no-analysis>" : item.top1) << "\n";
  }
  out << "# " << run << "\ttotal " << report.total << "\ttop1 "
      << report.top1_correct << "\ttopk " << report.topk_correct
      << "\ttop1_accuracy " << FormatDouble(report.top1_accuracy, 4)
      << "\ttopk_accuracy " << FormatDouble(report.topk_accuracy, 4) << "\n";
}

int CmdEval(const PipelineConfig &config, const ModelSet &models,
            const std::string &testset, const EvalOptions &options,
            std::ostream &out) {
  const auto items = ReadTestSet(testset);
  PrintReport("clean", Evaluate(models, items, config.decode), out);

  if (options.strip_separators) {
    auto stripped = items;
    for (auto &item : stripped) item.katakana = StripSeparators(item.katakana);
    PrintReport("no-separators", Evaluate(models, stripped, config.decode), out);
  }
  if (options.noise_rate) {
    const auto confusion = ReadResourceFile(
        Require(config.confusion, "confusion"), ReadConfusionTable);
    const auto noisy =
        CorruptItems(items, confusion, *options.noise_rate, options.seed);
    PrintReport("ocr-noise", Evaluate(models, noisy, config.decode), out);
  }
  return kOk;
}

}  // namespace translit::cli

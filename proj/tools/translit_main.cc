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

#include <exception>
#include <fstream>
#include <iostream>
#include <cstdint>
#include <string>

#include "CLI11.hpp"

#include "commands.h"
#include "translit/errors.h"

namespace {

using translit::cli::ExitCode;

int Run(int argc, char **argv) {
  CLI::App app{"Katakana to English back-transliteration"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "pipeline configuration (JSON)")
      ->required();

  std::string out;
  auto *train = app.add_subcommand("train", "learn the sound-mapping table");
  train->add_option("--out", out, "table path (default: config table_out)");

  auto *build = app.add_subcommand("build", "build and save the model set");
  build->add_option("--out", out, "model directory (default: config model_dir)");

  std::size_t k = 0;
  bool names = false;
  bool ocr = false;
  auto *decode = app.add_subcommand("decode", "decode katakana lines from stdin");
  std::string input = "-";
  decode->add_option("input", input, "input file, '-' for stdin");

  auto *eval = app.add_subcommand("eval", "score a katakana<TAB>reference set");
  std::string testset;
  bool strip = false;
  double noise_rate = -1.0;
  std::uint64_t seed = 1;
  eval->add_option("testset", testset, "test set path")->required();
  eval->add_flag("--strip-separators", strip,
                 "also evaluate with dot separators removed");
  eval->add_option("--noise-rate", noise_rate,
                   "also evaluate with glyph corruption at this rate")
      ->check(CLI::Range(0.0, 1.0));
  eval->add_option("--seed", seed, "corruption seed");

  for (auto *sub : {decode, eval}) {
    sub->add_option("--k", k, "candidates per input")->check(CLI::PositiveNumber);
    sub->add_flag("--names", names, "use the personal-name model");
    sub->add_flag("--ocr", ocr, "input is OCR output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? ExitCode::kOk : ExitCode::kUsageError;
  }

  try {
    auto config = translit::cli::LoadConfig(config_path);
    if (k > 0) config.decode.k = k;
    if (names) config.decode.name_mode = true;
    if (ocr) config.decode.use_ocr_model = true;

    if (train->parsed()) {
      return translit::cli::CmdTrain(config, out.empty() ? config.table_out : out,
                                     std::cerr);
    }
    if (build->parsed()) {
      return translit::cli::CmdBuild(config, out.empty() ? config.model_dir : out,
                                     std::cerr);
    }
    const auto models = translit::cli::LoadModels(config);
    if (decode->parsed()) {
      if (input == "-") {
        return translit::cli::CmdDecode(models, config.decode, std::cin,
                                        std::cout);
      }
      std::ifstream is(input, std::ios::binary);
      if (!is) throw std::runtime_error("cannot read " + input);
      return translit::cli::CmdDecode(models, config.decode, is, std::cout);
    }
    translit::cli::EvalOptions options;
    options.strip_separators = strip;
    if (noise_rate >= 0.0) options.noise_rate = noise_rate;
    options.seed = seed;
    return translit::cli::CmdEval(config, models, testset, options, std::cout);
  } catch (const translit::cli::ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kUsageError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode::kResourceError;
  }
}

}  // namespace

int main(int argc, char **argv) { return Run(argc, argv); }

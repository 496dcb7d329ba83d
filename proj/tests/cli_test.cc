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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.h"
#include "desk.h"
#include "doctest.h"
#include "oracles.h"
#include "translit/errors.h"
#include "translit/resources.h"
#include "translit/text_util.h"

namespace translit {
namespace {

namespace fs = std::filesystem;

// Scratch directory removed at scope exit.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("translit_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string &name) const { return path_ / name; }
  const fs::path &path() const { return path_; }

 private:
  fs::path path_;
};

void WriteFile(const fs::path &path, const std::string &text) {
  std::ofstream os(path, std::ios::binary);
  os << text;
}

std::string ReadFile(const fs::path &path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::string DecodeText(const std::string &input, std::size_t k, int &code) {
  DecodeOptions opts;
  opts.k = k;
  std::istringstream in(input);
  std::ostringstream out;
  code = cli::CmdDecode(desk::Models(), opts, in, out);
  return out.str();
}

std::vector<cli::TestItem> DeskItems() {
  return cli::ReadTestSet(desk::DataPath("desk_eval.tsv"));
}

TEST_CASE("config paths resolve against the config directory") {
  const auto &c = desk::Config();
  CHECK(fs::path(c.frequency).is_absolute());
  CHECK(fs::exists(c.frequency));
  CHECK(fs::path(c.frequency).filename() == "frequency.tsv");
  CHECK(c.decode.k == 5);
  CHECK(c.max_span == 4);
}

TEST_CASE("config errors are usage errors") {
  TempDir dir;
  auto load = [&](const std::string &text) {
    WriteFile(dir / "c.json", text);
    return cli::LoadConfig((dir / "c.json").string());
  };
  CHECK_NOTHROW(load(R"({"k": 3, "ocr_noise": null})"));
  CHECK_THROWS_AS(load("{"), cli::ConfigError);
  CHECK_THROWS_AS(load("[]"), cli::ConfigError);
  CHECK_THROWS_AS(load(R"({"colour": 1})"), cli::ConfigError);
  CHECK_THROWS_AS(load(R"({"k": 0})"), cli::ConfigError);
  CHECK_THROWS_AS(load(R"({"k": -2})"), cli::ConfigError);
  CHECK_THROWS_AS(load(R"({"frequency": 3})"), cli::ConfigError);
  CHECK_THROWS_AS(load(R"({"em_tol": 0})"), cli::ConfigError);
  CHECK_THROWS_AS(cli::LoadConfig((dir / "absent.json").string()),
                  cli::ConfigError);
  // Well-formed but incomplete configurations fail when resources load.
  CHECK_THROWS_AS(cli::LoadResources(load("{}")), cli::ConfigError);
}

TEST_CASE("decode prints rank, probability and words") {
  int code = -1;
  const auto out = DecodeText("マスターズトーナメント\n", 1, code);
  CHECK(code == 0);
  const auto fields = SplitTabs(out.substr(0, out.size() - 1));
  REQUIRE(fields.size() == 3);
  CHECK(fields[0] == "1");
  CHECK(std::stod(fields[1]) > 0.0);
  CHECK(fields[2] == "masters tournament");
}

TEST_CASE("decode ranks increase while probabilities do not") {
  int code = -1;
  std::istringstream lines(DecodeText("ゴルフボール\n", 5, code));
  std::string line;
  int rank = 0;
  double prev = 1.0;
  while (std::getline(lines, line)) {
    const auto f = SplitTabs(line);
    REQUIRE(f.size() == 3);
    CHECK(std::stoi(f[0]) == ++rank);
    CHECK(std::stod(f[1]) <= prev);
    prev = std::stod(f[1]);
  }
  CHECK(rank == 5);
}

TEST_CASE("decode keeps going after a bad line") {
  int code = -1;
  const auto out = DecodeText("漢字\n\xe3\x82\nホテル\n", 1, code);
  CHECK(code == 0);
  CHECK(out.find("# error: unknown symbol '漢'") != std::string::npos);
  CHECK(out.find("# error: invalid UTF-8") != std::string::npos);
  CHECK(out.find("1\t") != std::string::npos);
  CHECK(out.find("\thotel\n") != std::string::npos);

  DecodeText("漢字\n", 1, code);
  CHECK(code == cli::kResourceError);
}

TEST_CASE("decode reports no-analysis with a fallback comment") {
  int code = -1;
  const auto out = DecodeText("チョコレートケーキ\n", 3, code);
  CHECK(code == 0);
  CHECK(out.rfind("0\t0\t<no-analysis>\n# fallback", 0) == 0);
}

TEST_CASE("decoding a stream equals decoding each line") {
  const std::vector<std::string> lines{"アースデー", "漢", "ゴルフバッグ",
                                       "チョコレートケーキ", "サッカー"};
  std::string joined, pieces;
  int code = -1;
  for (const auto &l : lines) {
    joined += l + "\n";
    pieces += DecodeText(l + "\n", 3, code);
  }
  CHECK(DecodeText(joined, 3, code) == pieces);
}

TEST_CASE("train matches enumeration EM on a toy glossary") {
  TempDir dir;
  WriteFile(dir / "glossary.tsv", "golf ball\tゴルフボール\nsoccer\tサッカー\n");
  auto config = desk::Config();
  config.glossary = (dir / "glossary.tsv").string();
  config.em_iters = 3;
  config.em_tol = 1e-300;
  std::ostringstream log;
  REQUIRE(cli::CmdTrain(config, (dir / "t1.tsv").string(), log) == 0);
  CHECK(log.str().find("iterations\t3") != std::string::npos);
  CHECK(log.str().find("skipped\t0") != std::string::npos);
  CHECK(log.str().find("log_likelihood\t") != std::string::npos);

  const SoundPairCorpus corpus{
      {SplitWhitespace("G AA L F B AO L"),
       SplitWhitespace("g o r u f u b o o r u")},
      {SplitWhitespace("S AA K ER"), SplitWhitespace("s a kk a a")}};
  const auto want = oracle::EnumerationEm(corpus, 4, 3);
  const auto got = ReadResourceFile((dir / "t1.tsv").string(),
                                    ReadSoundMappingTable);
  std::size_t nonzero = 0;
  for (const auto &[key, p] : want.params) {
    if (p <= 0.0) continue;
    ++nonzero;
    double found = 0.0;
    for (const auto &m : got.rows.at(key.first)) {
      if (m.japanese == key.second) found = m.probability;
    }
    // The table is written with nine significant digits.
    CHECK(std::fabs(found - p) <= 1e-8);
  }
  std::size_t written = 0;
  for (const auto &[e, row] : got.rows) written += row.size();
  CHECK(written == nonzero);

  // Same inputs, same bytes.
  REQUIRE(cli::CmdTrain(config, (dir / "t2.tsv").string(), log) == 0);
  CHECK(ReadFile(dir / "t1.tsv") == ReadFile(dir / "t2.tsv"));
}

TEST_CASE("train fails when nothing aligns") {
  TempDir dir;
  WriteFile(dir / "glossary.tsv", "barbershop\tババ\n");
  auto config = desk::Config();
  config.glossary = (dir / "glossary.tsv").string();
  std::ostringstream log;
  CHECK_THROWS_AS(cli::CmdTrain(config, (dir / "t.tsv").string(), log),
                  TrainingError);
}

TEST_CASE("built models reload with identical behaviour") {
  TempDir dir;
  const auto &config = desk::Config();
  std::ostringstream log;
  REQUIRE(cli::CmdBuild(config, (dir / "a").string(), log) == 0);
  REQUIRE(cli::CmdBuild(config, (dir / "b").string(), log) == 0);
  CHECK(IsModelSetDir((dir / "a").string()));
  std::size_t files = 0;
  for (const auto &entry : fs::directory_iterator(dir / "a")) {
    ++files;
    CHECK(ReadFile(entry.path()) ==
          ReadFile(dir / "b" / entry.path().filename()));
  }
  CHECK(files == 11);

  auto reload = config;
  reload.model_dir = (dir / "a").string();
  const ModelSet loaded = cli::LoadModels(reload);
  DecodeOptions opts;
  opts.k = 3;
  for (const auto &item : DeskItems()) {
    const auto obs = ObservedGlyphs(item.katakana);
    const auto a = BackTransliterate(obs, desk::Models(), opts);
    const auto b = BackTransliterate(obs, loaded, opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].Text() == b[i].Text());
      CHECK(a[i].cost.Cost() == b[i].cost.Cost());
    }
  }
}

TEST_CASE("build needs every resource") {
  auto config = desk::Config();
  config.pronunciations = desk::DataPath("absent.tsv");
  std::ostringstream log;
  CHECK_THROWS(cli::CmdBuild(config, "unused", log));
}

TEST_CASE("eval accuracy equals the count of correct verdicts") {
  DecodeOptions opts;
  opts.k = 5;
  const auto report = cli::Evaluate(desk::Models(), DeskItems(), opts);
  std::size_t top1 = 0, topk = 0;
  for (const auto &item : report.items) {
    top1 += item.top1_correct;
    topk += item.topk_correct;
    if (item.top1_correct) CHECK(item.topk_correct);
  }
  CHECK(report.total == report.items.size());
  CHECK(report.top1_correct == top1);
  CHECK(report.topk_correct == topk);
  CHECK(report.top1_accuracy == doctest::Approx(double(top1) / report.total));
  CHECK(report.topk_accuracy == doctest::Approx(double(topk) / report.total));
}

TEST_CASE("eval scores a fully decodable set perfectly") {
  auto items = DeskItems();
  std::erase_if(items, [](const cli::TestItem &i) {
    return i.reference == "chocolate cake";
  });
  // Case and spacing in references do not matter.
  items.front().reference = "  Earth   DAY ";
  const auto report = cli::Evaluate(desk::Models(), items, {});
  CHECK(report.top1_accuracy == 1.0);
}

TEST_CASE("eval with zero noise equals the clean run") {
  const auto items = DeskItems();
  const auto &confusion = desk::Resources().confusion;
  const auto noisy = cli::CorruptItems(items, confusion, 0.0, 42);
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(noisy[i].katakana == items[i].katakana);
  }
  DecodeOptions opts;
  opts.k = 5;
  CHECK(cli::Evaluate(desk::Models(), noisy, opts).top1_correct ==
        cli::Evaluate(desk::Models(), items, opts).top1_correct);
}

TEST_CASE("corruption is seeded and uses the confusion table") {
  const auto items = DeskItems();
  const auto &confusion = desk::Resources().confusion;
  const auto a = cli::CorruptItems(items, confusion, 0.5, 1);
  const auto b = cli::CorruptItems(items, confusion, 0.5, 1);
  const auto c = cli::CorruptItems(items, confusion, 0.5, 2);
  bool changed = false, differs = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    CHECK(a[i].katakana == b[i].katakana);
    CHECK(a[i].reference == items[i].reference);
    changed |= a[i].katakana != items[i].katakana;
    differs |= a[i].katakana != c[i].katakana;
    const auto orig = *SplitUtf8(items[i].katakana);
    const auto seen = *SplitUtf8(a[i].katakana);
    REQUIRE(orig.size() == seen.size());
    for (std::size_t g = 0; g < orig.size(); ++g) {
      if (orig[g] == seen[g]) continue;
      bool listed = false;
      for (const auto &[out, p] : confusion.rows.at(orig[g])) {
        listed |= out == seen[g];
      }
      CHECK(listed);
    }
  }
  CHECK(changed);
  CHECK(differs);
}

TEST_CASE("eval runs the requested variants") {
  cli::EvalOptions options;
  options.strip_separators = true;
  options.noise_rate = 0.0;
  std::ostringstream out;
  CHECK(cli::CmdEval(desk::Config(), desk::Models(),
                     desk::DataPath("desk_eval.tsv"), options, out) == 0);
  const auto text = out.str();
  CHECK(text.find("# run\tclean") != std::string::npos);
  CHECK(text.find("# run\tno-separators") != std::string::npos);
  CHECK(text.find("# run\tocr-noise") != std::string::npos);
  CHECK(cli::StripSeparators("ロバート・ショーン") == "ロバートショーン");
}

TEST_CASE("an empty test set is an error") {
  TempDir dir;
  WriteFile(dir / "empty.tsv", "# nothing here\n");
  CHECK_THROWS(cli::ReadTestSet((dir / "empty.tsv").string()));
  WriteFile(dir / "bad.tsv", "アースデー\n");
  CHECK_THROWS_AS(cli::ReadTestSet((dir / "bad.tsv").string()), ParseError);
}

}  // namespace
}  // namespace translit

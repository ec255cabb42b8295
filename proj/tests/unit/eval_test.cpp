#include <doctest.h>

#include <random>
#include <sstream>

#include "factcheck/errors.hpp"
#include "factcheck/eval/dataset.hpp"
#include "factcheck/eval/harness.hpp"
#include "factcheck/eval/metrics.hpp"
#include "factcheck/service/app.hpp"
#include "support/oracles.hpp"

using namespace factcheck;
using namespace factcheck::eval;

namespace {

Dataset Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseDataset(in);
}

const char* kHeader = "text\tlanguage\tsplit\tcheckworthy\tveracity\tevidence\n";

EvalRun Run(const Dataset& d, Task task) {
  service::AppConfig config;
  config.data_dir = oracle::DataDir();
  const auto models = service::BuildModels(config);
  return RunEval(d, task, service::BuildDetector(config, models), service::BuildPredictor(config, models));
}

}  // namespace

TEST_CASE("f1 hand examples") {
  const std::vector<int> gold{1, 1, 0, 0}, pred{1, 0, 1, 0};
  const auto f = ComputeF1(gold, pred);
  CHECK(f.macro_f1 == 0.5);
  CHECK(f.micro_f1 == 0.5);
  const std::vector<int> all_one{1, 1, 1};
  const std::vector<int> all_zero{0, 0, 0};
  CHECK(ComputeF1(all_one, all_one).macro_f1 == 1.0);
  CHECK(ComputeF1(all_one, all_zero).macro_f1 == 0.0);
  const std::vector<int> short_pred{1};
  CHECK_THROWS_AS(ComputeF1(gold, short_pred), Error);
  CHECK_THROWS_AS(ComputeF1({}, {}), Error);
}

TEST_CASE("f1 matches the confusion matrix oracle") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const int classes = 2 + static_cast<int>(rng() % 3);
    const std::size_t n = 1 + rng() % 50;
    std::vector<int> gold(n), pred(n);
    for (std::size_t k = 0; k < n; ++k) {
      gold[k] = static_cast<int>(rng() % classes);
      pred[k] = static_cast<int>(rng() % classes);
    }
    const auto got = ComputeF1(gold, pred);
    const auto want = oracle::ConfusionF1(gold, pred);
    CHECK(got.macro_f1 == want.macro);
    CHECK(got.micro_f1 == want.micro);
  }
}

TEST_CASE("bundled english test split") {
  const auto d = LoadDataset(oracle::DataDir() / "eval" / "en_test.tsv");
  const auto c = d.Counts(Split::kTest);
  CHECK(c.records == 100);
  CHECK(c.checkworthy == 38);
  CHECK(c.not_checkworthy == 62);
  CHECK(c.veracity_true == 26);
  CHECK(c.veracity_false == 12);
  CHECK(d.Counts(Split::kTrain).records == 0);
}

TEST_CASE("dataset parsing") {
  CHECK(Parse(kHeader).records.empty());
  const auto d = Parse(std::string(kHeader) + "A\\tb\\nc\\\\\ten\ttest\t1\ttrue\tev one\tev two\n\n");
  REQUIRE(d.records.size() == 1);
  CHECK(d.records[0].text == "A\tb\nc\\");
  CHECK(d.records[0].split == Split::kTest);
  CHECK(d.records[0].checkworthy_gold == true);
  CHECK(d.records[0].veracity_gold == true);
  CHECK(d.records[0].evidence_texts == std::vector<std::string>{"ev one", "ev two"});
  CHECK(UnescapeField(EscapeField("x\ty\n\\z")) == "x\ty\n\\z");
  CHECK(ParseSplit("DEV") == Split::kDev);
  CHECK_FALSE(ParseSplit("holdout").has_value());
}

TEST_CASE("schema errors name the row") {
  auto row_of = [](const std::string& text) -> std::size_t {
    try {
      Parse(text);
    } catch (const SchemaError& e) {
      return e.row();
    }
    return 0;
  };
  CHECK(row_of("wrong\theader\n") == 1);
  CHECK(row_of(std::string(kHeader) + "ok\ten\tTest\t1\t\n" + "no label\ten\tTest\t\t\n") == 3);
  CHECK(row_of(std::string(kHeader) + "bad split\ten\tHoldout\t1\t\n") == 2);
  CHECK(row_of(std::string(kHeader) + "bad cw\ten\tTest\tmaybe\t\n") == 2);
  CHECK(row_of(std::string(kHeader) + "too few\ten\n") == 2);
}

TEST_CASE("reports round-trip through csv") {
  const std::vector<MetricsRow> rows{{"de", Task::kClaimDetection, 0.762, 0.8, 5}, {"en", Task::kVeracity, 1.0, 1.0, 2}};
  const std::string csv = EmitReport(rows, ReportFormat::kCsv);
  CHECK(csv.rfind("language,task,macro_f1,micro_f1,n\n", 0) == 0);
  CHECK(ParseCsvReport(csv) == rows);
  CHECK_THROWS_AS(ParseCsvReport("language,task\nxx"), SchemaError);
  CHECK(ParseTask("claims") == Task::kClaimDetection);
  CHECK(ParseTask("Veracity") == Task::kVeracity);
}

TEST_CASE("multilingual golden reports") {
  const auto d = LoadDataset(oracle::FixtureDir() / "eval" / "multilingual.tsv");
  const auto claims = Run(d, Task::kClaimDetection);
  CHECK(EmitReport(claims.rows, ReportFormat::kCsv) == oracle::ReadFile(oracle::FixtureDir() / "eval" / "multilingual_claims.csv"));
  CHECK(EmitReport(claims.rows, ReportFormat::kTable) == oracle::ReadFile(oracle::FixtureDir() / "eval" / "multilingual_claims.txt"));
  const auto veracity = Run(d, Task::kVeracity);
  CHECK(EmitReport(veracity.rows, ReportFormat::kCsv) == oracle::ReadFile(oracle::FixtureDir() / "eval" / "multilingual_veracity.csv"));
}

TEST_CASE("english claim detection row is recomputed from the oracle") {
  const auto d = LoadDataset(oracle::FixtureDir() / "eval" / "multilingual.tsv");
  std::vector<int> gold, pred;
  for (const auto& r : d.records) {
    if (r.language != "en" || !r.checkworthy_gold) continue;
    gold.push_back(*r.checkworthy_gold);
    pred.push_back(model::MockTextScorer::LooksCheckworthy(r.text) && text::SplitWhitespace(r.text).size() >= 3);
  }
  const auto want = oracle::ConfusionF1(gold, pred);
  const auto run = Run(d, Task::kClaimDetection);
  const auto it = std::find_if(run.rows.begin(), run.rows.end(), [](const auto& r) { return r.language == "en"; });
  REQUIRE(it != run.rows.end());
  CHECK(it->macro_f1 == want.macro);
  CHECK(it->micro_f1 == want.micro);
  CHECK(it->n == gold.size());
}

#include "factcheck/eval/harness.hpp"

#include <spdlog/spdlog.h>

#include <charconv>
#include <cstdio>
#include <map>
#include <optional>

#include "factcheck/concurrency.hpp"
#include "factcheck/errors.hpp"
#include "factcheck/eval/metrics.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::eval {
namespace {

struct Scored {
  int gold = 0;
  int pred = 0;
};

std::optional<Scored> ScoreClaim(const EvalRecord& r, const claims::ClaimDetector& detector) {
  if (!r.checkworthy_gold) return std::nullopt;
  const auto result = detector.ClassifyCheckworthy(r.text, r.language);
  return Scored{*r.checkworthy_gold ? 1 : 0, result.label ? 1 : 0};
}

std::optional<Scored> ScoreVeracity(const EvalRecord& r, std::size_t index,
                                    const veracity::VeracityPredictor& predictor) {
  if (!r.veracity_gold || r.evidence_texts.empty()) return std::nullopt;
  claims::Claim claim;
  claim.id = "r" + std::to_string(index);
  claim.sentence.text = r.text;
  claim.sentence.end = text::Length(r.text);
  claim.enriched_text = r.text;
  claim.language = r.language;

  std::vector<veracity::StanceVerdict> verdicts;
  for (std::size_t i = 0; i < r.evidence_texts.size(); ++i) {
    evidence::Snippet snippet;
    snippet.paragraph_index = i;
    snippet.text = r.evidence_texts[i];
    try {
      verdicts.push_back(predictor.ClassifyStance(claim, snippet));
    } catch (const Error& e) {
      spdlog::debug("record {} evidence {} dropped: {}", index, i, e.what());
    }
  }
  const auto agg = veracity::AggregateStances(verdicts);
  if (agg.label == veracity::VeracityLabel::kUnverifiable) return std::nullopt;
  return Scored{*r.veracity_gold ? 1 : 0, agg.label == veracity::VeracityLabel::kSupported ? 1 : 0};
}

std::string Fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string PadRight(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

double ParseDouble(std::string_view s, std::size_t row) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw SchemaError(row, "bad number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::string_view TaskName(Task task) {
  return task == Task::kClaimDetection ? "ClaimDetection" : "Veracity";
}

Task ParseTask(std::string_view name) {
  const std::string lower = text::ToLower(name);
  if (lower == "claims" || lower == "claimdetection") return Task::kClaimDetection;
  if (lower == "veracity") return Task::kVeracity;
  throw Error(ErrorCode::kInvalidInput, "unknown task: " + std::string(name));
}

ReportFormat ParseReportFormat(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  throw Error(ErrorCode::kInvalidInput, "unknown report format: " + std::string(name));
}

EvalRun RunEval(const Dataset& dataset, Task task, const claims::ClaimDetector& detector,
                const veracity::VeracityPredictor& predictor, std::size_t max_parallel) {
  const auto& records = dataset.records;
  std::vector<std::optional<Scored>> scored(records.size());
  ParallelFor(records.size(), max_parallel, [&](std::size_t i) {
    try {
      scored[i] = task == Task::kClaimDetection ? ScoreClaim(records[i], detector)
                                                : ScoreVeracity(records[i], i, predictor);
    } catch (const Error& e) {
      spdlog::warn("record {} skipped: {}", i, e.what());
    }
  });

  std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> by_language;
  EvalRun run;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!scored[i]) {
      ++run.skipped;
      continue;
    }
    auto& [gold, pred] = by_language[records[i].language];
    gold.push_back(scored[i]->gold);
    pred.push_back(scored[i]->pred);
  }
  for (const auto& [language, labels] : by_language) {
    const F1Scores f1 = ComputeF1(labels.first, labels.second);
    run.rows.push_back({language, task, f1.macro_f1, f1.micro_f1, labels.first.size()});
  }
  return run;
}

std::string EmitReport(const std::vector<MetricsRow>& rows, ReportFormat format) {
  std::string out;
  if (format == ReportFormat::kCsv) {
    out = "language,task,macro_f1,micro_f1,n\n";
    for (const auto& r : rows) {
      out += r.language + "," + std::string(TaskName(r.task)) + "," + Fixed3(r.macro_f1) + "," +
             Fixed3(r.micro_f1) + "," + std::to_string(r.n) + "\n";
    }
    return out;
  }
  std::size_t lang_width = 8;
  for (const auto& r : rows) lang_width = std::max(lang_width, r.language.size());
  out = PadRight("language", lang_width + 2) + PadRight("task", 16) + "macro_f1  micro_f1  n\n";
  for (const auto& r : rows) {
    out += PadRight(r.language, lang_width + 2) + PadRight(std::string(TaskName(r.task)), 16) +
           PadRight(Fixed3(r.macro_f1), 10) + PadRight(Fixed3(r.micro_f1), 10) +
           std::to_string(r.n) + "\n";
  }
  return out;
}

std::vector<MetricsRow> ParseCsvReport(std::string_view csv) {
  std::vector<MetricsRow> rows;
  std::size_t row = 0;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t nl = csv.find('\n', pos);
    if (nl == std::string_view::npos) nl = csv.size();
    std::string_view line = csv.substr(pos, nl - pos);
    pos = nl + 1;
    ++row;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (row == 1) {
      if (line != "language,task,macro_f1,micro_f1,n") throw SchemaError(row, "unexpected header");
      continue;
    }
    std::vector<std::string_view> f;
    std::size_t start = 0;
    for (std::size_t comma; (comma = line.find(',', start)) != std::string_view::npos; start = comma + 1) {
      f.push_back(line.substr(start, comma - start));
    }
    f.push_back(line.substr(start));
    if (f.size() != 5) throw SchemaError(row, "expected 5 columns");
    MetricsRow r;
    r.language = std::string(f[0]);
    try {
      r.task = ParseTask(f[1]);
    } catch (const Error&) {
      throw SchemaError(row, "unknown task '" + std::string(f[1]) + "'");
    }
    r.macro_f1 = ParseDouble(f[2], row);
    r.micro_f1 = ParseDouble(f[3], row);
    const auto [ptr, ec] = std::from_chars(f[4].data(), f[4].data() + f[4].size(), r.n);
    if (ec != std::errc() || ptr != f[4].data() + f[4].size()) throw SchemaError(row, "bad count");
    rows.push_back(std::move(r));
  }
  if (row == 0) throw SchemaError(1, "missing header");
  return rows;
}

}  // namespace factcheck::eval

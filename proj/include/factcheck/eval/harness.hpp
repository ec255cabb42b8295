#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/claims/detector.hpp"
#include "factcheck/eval/dataset.hpp"
#include "factcheck/veracity/predictor.hpp"

namespace factcheck::eval {

enum class Task { kClaimDetection, kVeracity };

std::string_view TaskName(Task task);
// Accepts the report names and the CLI spellings "claims" / "veracity".
Task ParseTask(std::string_view name);

struct MetricsRow {
  std::string language;
  Task task = Task::kClaimDetection;
  double macro_f1 = 0.0;
  double micro_f1 = 0.0;
  std::size_t n = 0;

  bool operator==(const MetricsRow&) const = default;
};

struct EvalRun {
  std::vector<MetricsRow> rows;  // sorted by language
  std::size_t skipped = 0;       // records without usable gold, evidence or backend answer
};

// Claim detection scores every record with a check-worthiness label through
// the detector's classifier. Veracity classifies each evidence text against
// the record text, takes the majority vote and maps Supported -> True,
// Disputed -> False; records without evidence are skipped. Languages with no
// scored record produce no row.
EvalRun RunEval(const Dataset& dataset, Task task, const claims::ClaimDetector& detector,
                const veracity::VeracityPredictor& predictor, std::size_t max_parallel = 4);

enum class ReportFormat { kTable, kCsv };

ReportFormat ParseReportFormat(std::string_view name);

// Columns language, task, macro_f1, micro_f1, n; scores with three decimals.
std::string EmitReport(const std::vector<MetricsRow>& rows, ReportFormat format);

// Reads what EmitReport(kCsv) writes. Throws SchemaError.
std::vector<MetricsRow> ParseCsvReport(std::string_view csv);

}  // namespace factcheck::eval

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factcheck::eval {

enum class Split { kTrain, kDev, kTest };

std::string_view SplitName(Split split);
// Case-insensitive.
std::optional<Split> ParseSplit(std::string_view name);

struct EvalRecord {
  std::string text;
  std::string language;
  Split split = Split::kTest;
  std::optional<bool> checkworthy_gold;
  std::optional<bool> veracity_gold;  // true = True, false = False
  std::vector<std::string> evidence_texts;

  bool operator==(const EvalRecord&) const = default;
};

struct SplitCounts {
  std::size_t records = 0;
  std::size_t checkworthy = 0;
  std::size_t not_checkworthy = 0;
  std::size_t veracity_true = 0;
  std::size_t veracity_false = 0;

  bool operator==(const SplitCounts&) const = default;
};

struct Dataset {
  std::vector<EvalRecord> records;

  SplitCounts Counts() const;
  SplitCounts Counts(Split split) const;
  std::map<std::string, SplitCounts> CountsByLanguage() const;
};

// Tab-separated, first line is the header
//   text  language  split  checkworthy  veracity  evidence...
// checkworthy is 1, 0 or empty; veracity is True, False or empty. Every
// column after veracity holds one evidence text. Fields may use the escapes
// \t, \n and \\. Blank lines are ignored. Throws SchemaError naming the
// 1-based line.
Dataset ParseDataset(std::istream& in);
Dataset LoadDataset(const std::filesystem::path& path);

std::string EscapeField(std::string_view field);
std::string UnescapeField(std::string_view field);

}  // namespace factcheck::eval

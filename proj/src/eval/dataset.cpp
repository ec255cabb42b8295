#include "factcheck/eval/dataset.hpp"

#include <fstream>

#include "factcheck/errors.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::eval {
namespace {

constexpr std::string_view kHeader[] = {"text", "language", "split", "checkworthy", "veracity"};

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

void Tally(SplitCounts& counts, const EvalRecord& r) {
  ++counts.records;
  if (r.checkworthy_gold) ++(*r.checkworthy_gold ? counts.checkworthy : counts.not_checkworthy);
  if (r.veracity_gold) ++(*r.veracity_gold ? counts.veracity_true : counts.veracity_false);
}

}  // namespace

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain: return "Train";
    case Split::kDev: return "Dev";
    case Split::kTest: return "Test";
  }
  return "Test";
}

std::optional<Split> ParseSplit(std::string_view name) {
  const std::string lower = text::ToLower(name);
  if (lower == "train") return Split::kTrain;
  if (lower == "dev") return Split::kDev;
  if (lower == "test") return Split::kTest;
  return std::nullopt;
}

std::string EscapeField(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

std::string UnescapeField(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] == '\\' && i + 1 < field.size()) {
      const char next = field[i + 1];
      if (next == 't' || next == 'n' || next == '\\') {
        out += next == 't' ? '\t' : next == 'n' ? '\n' : '\\';
        ++i;
        continue;
      }
    }
    out += field[i];
  }
  return out;
}

SplitCounts Dataset::Counts() const {
  SplitCounts c;
  for (const auto& r : records) Tally(c, r);
  return c;
}

SplitCounts Dataset::Counts(Split split) const {
  SplitCounts c;
  for (const auto& r : records) {
    if (r.split == split) Tally(c, r);
  }
  return c;
}

std::map<std::string, SplitCounts> Dataset::CountsByLanguage() const {
  std::map<std::string, SplitCounts> out;
  for (const auto& r : records) Tally(out[r.language], r);
  return out;
}

Dataset ParseDataset(std::istream& in) {
  std::string line;
  std::size_t row = 0;
  bool have_header = false;
  while (!have_header && std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() < std::size(kHeader)) throw SchemaError(row, "header has too few columns");
    for (std::size_t i = 0; i < std::size(kHeader); ++i) {
      if (text::ToLower(text::Trim(fields[i])) != kHeader[i]) {
        throw SchemaError(row, "expected column '" + std::string(kHeader[i]) + "', got '" +
                                   std::string(fields[i]) + "'");
      }
    }
    have_header = true;
  }
  if (!have_header) throw SchemaError(row == 0 ? 1 : row, "missing header");

  Dataset data;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() < std::size(kHeader)) {
      throw SchemaError(row, "expected at least 5 columns, got " + std::to_string(fields.size()));
    }
    EvalRecord r;
    r.text = UnescapeField(fields[0]);
    if (text::Trim(r.text).empty()) throw SchemaError(row, "empty text");
    r.language = std::string(text::Trim(fields[1]));
    if (r.language.empty()) throw SchemaError(row, "empty language");
    const auto split = ParseSplit(text::Trim(fields[2]));
    if (!split) throw SchemaError(row, "unknown split '" + std::string(fields[2]) + "'");
    r.split = *split;

    const std::string_view cw = text::Trim(fields[3]);
    if (cw == "1") r.checkworthy_gold = true;
    else if (cw == "0") r.checkworthy_gold = false;
    else if (!cw.empty()) throw SchemaError(row, "checkworthy must be 1, 0 or empty");

    const std::string ver = text::ToLower(text::Trim(fields[4]));
    if (ver == "true") r.veracity_gold = true;
    else if (ver == "false") r.veracity_gold = false;
    else if (!ver.empty()) throw SchemaError(row, "veracity must be True, False or empty");

    if (!r.checkworthy_gold && !r.veracity_gold) throw SchemaError(row, "no gold label");
    for (std::size_t i = std::size(kHeader); i < fields.size(); ++i) {
      std::string ev = UnescapeField(fields[i]);
      if (!text::Trim(ev).empty()) r.evidence_texts.push_back(std::move(ev));
    }
    data.records.push_back(std::move(r));
  }
  return data;
}

Dataset LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open dataset " + path.string());
  return ParseDataset(in);
}

}  // namespace factcheck::eval

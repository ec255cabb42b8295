#include "factcheck/claims/segmenter.hpp"

#include <fstream>

#include "factcheck/errors.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::claims {
namespace {

std::string PrimaryTag(std::string_view language) {
  const auto dash = language.find_first_of("-_");
  return text::ToLower(language.substr(0, dash));
}

bool IsClosing(char32_t c) {
  switch (c) {
    case '"': case '\'': case ')': case ']': case '}':
    case 0x00BB: case 0x2019: case 0x201D: case 0x203A:
    case 0x300D: case 0x300F: case 0xFF09:
      return true;
    default:
      return false;
  }
}

bool SplitsUnconditionally(char32_t c) { return c == 0x0964 || c == 0x3002 || c == 0xFF01 || c == 0xFF1F; }

}  // namespace

std::string_view ClaimStatusName(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kDetected: return "Detected";
    case ClaimStatus::kVerifying: return "Verifying";
    case ClaimStatus::kVerified: return "Verified";
    case ClaimStatus::kFailed: return "Failed";
  }
  return "Detected";
}

ClaimStatus ParseClaimStatus(std::string_view name) {
  if (name == "Detected") return ClaimStatus::kDetected;
  if (name == "Verifying") return ClaimStatus::kVerifying;
  if (name == "Verified") return ClaimStatus::kVerified;
  if (name == "Failed") return ClaimStatus::kFailed;
  throw Error(ErrorCode::kInvalidInput, "unknown claim status: " + std::string(name));
}

AbbreviationTable AbbreviationTable::LoadDirectory(const std::filesystem::path& dir) {
  AbbreviationTable table;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) return table;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".txt") continue;
    const std::string lang = entry.path().stem().string();
    std::ifstream in(entry.path(), std::ios::binary);
    std::string line;
    while (std::getline(in, line)) {
      const std::string_view trimmed = text::Trim(line);
      if (trimmed.empty() || trimmed.front() == '#') continue;
      table.Add(lang, trimmed);
    }
  }
  return table;
}

void AbbreviationTable::Add(std::string_view language, std::string_view token) {
  by_language_[PrimaryTag(language)].insert(text::ToLower(token));
}

bool AbbreviationTable::Contains(std::string_view language, std::string_view token) const {
  const auto it = by_language_.find(PrimaryTag(language));
  return it != by_language_.end() && it->second.count(text::ToLower(token)) > 0;
}

RuleSegmenter::RuleSegmenter(AbbreviationTable abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

bool RuleSegmenter::IsTerminator(char32_t c) {
  return c == '.' || c == '!' || c == '?' || SplitsUnconditionally(c);
}

std::vector<Sentence> RuleSegmenter::Segment(std::string_view article,
                                             std::string_view language) const {
  const std::u32string cps = text::Decode(article);
  std::vector<Sentence> out;

  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && text::IsSpace(cps[begin])) ++begin;
    while (end > begin && text::IsSpace(cps[end - 1])) --end;
    if (begin == end) return;
    out.push_back({out.size(), text::Encode(std::u32string_view(cps).substr(begin, end - begin)),
                   begin, end});
  };

  std::size_t sentence_start = 0;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (!IsTerminator(cps[i])) {
      ++i;
      continue;
    }
    const std::size_t run_start = i;
    bool unconditional = false;
    while (i < cps.size() && IsTerminator(cps[i])) {
      unconditional = unconditional || SplitsUnconditionally(cps[i]);
      ++i;
    }
    while (i < cps.size() && IsClosing(cps[i])) ++i;
    const bool at_gap = i == cps.size() || text::IsSpace(cps[i]);
    if (!unconditional && !at_gap) continue;

    if (!unconditional && i - run_start == 1 && cps[run_start] == '.') {
      std::size_t word_start = run_start;
      while (word_start > sentence_start && !text::IsSpace(cps[word_start - 1])) --word_start;
      while (word_start < run_start && (text::IsPunct(cps[word_start]) || IsClosing(cps[word_start]))) {
        ++word_start;
      }
      const std::string word =
          text::Encode(std::u32string_view(cps).substr(word_start, run_start + 1 - word_start));
      if (word.size() > 1 && abbreviations_.Contains(language, word)) continue;
    }
    emit(sentence_start, i);
    sentence_start = i;
  }
  emit(sentence_start, cps.size());
  return out;
}

}  // namespace factcheck::claims

#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/claims/types.hpp"

namespace factcheck::claims {

class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual std::vector<Sentence> Segment(std::string_view article, std::string_view language) const = 0;
};

// Per-language abbreviation exceptions read from `<dir>/<lang>.txt` (one
// token per line, trailing period included, `#` starts a comment). Lookup is
// case-insensitive and falls back from "nb-NO" to "nb".
class AbbreviationTable {
 public:
  AbbreviationTable() = default;

  static AbbreviationTable LoadDirectory(const std::filesystem::path& dir);

  void Add(std::string_view language, std::string_view token);
  bool Contains(std::string_view language, std::string_view token) const;

 private:
  std::map<std::string, std::set<std::string>, std::less<>> by_language_;
};

// Splits after a run of terminators {. ! ? । 。 ！ ？} plus any closing
// quotes/brackets. ASCII terminators need following whitespace or end of
// text; the others split unconditionally. A lone "." closing a listed
// abbreviation does not split.
class RuleSegmenter final : public Segmenter {
 public:
  explicit RuleSegmenter(AbbreviationTable abbreviations = {});

  std::vector<Sentence> Segment(std::string_view article, std::string_view language) const override;

  static bool IsTerminator(char32_t c);

 private:
  AbbreviationTable abbreviations_;
};

}  // namespace factcheck::claims

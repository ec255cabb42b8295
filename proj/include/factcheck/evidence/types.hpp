#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace factcheck::evidence {

enum class QueryKind { kQuestion, kKeyword, kVerbatimClaim };

std::string_view QueryKindName(QueryKind kind);

// Query text is non-empty and at most kMaxChars code points.
struct SearchQuery {
  static constexpr std::size_t kMaxChars = 256;

  std::string claim_id;
  std::string text;
  QueryKind kind = QueryKind::kVerbatimClaim;

  bool operator==(const SearchQuery&) const = default;
};

enum class SourceKind { kWebSearch, kEncyclopedia, kFactCheck, kScholarly };

std::string_view SourceKindName(SourceKind kind);
SourceKind ParseSourceKind(std::string_view name);

struct EvidenceDoc {
  std::string url;
  std::string domain;  // lowercase registrable domain of url
  std::string title;
  std::string content;
  SourceKind source_kind = SourceKind::kWebSearch;
  std::string language;
  std::optional<std::int64_t> citation_count;  // present iff kScholarly
  std::chrono::system_clock::time_point retrieved_at{};

  bool operator==(const EvidenceDoc&) const = default;
};

// Validates fields and derives the domain. A scholarly doc without a
// citation count gets 0; other kinds drop any count they were given.
// Throws InvalidInput for a relative URL or empty content.
EvidenceDoc MakeEvidenceDoc(std::string url, std::string title, std::string content,
                            SourceKind kind, std::string language,
                            std::optional<std::int64_t> citation_count,
                            std::chrono::system_clock::time_point retrieved_at = {});

struct Snippet {
  std::shared_ptr<const EvidenceDoc> doc;
  std::size_t paragraph_index = 0;
  std::string text;
  double similarity = 0.0;
  int rank = 1;
};

}  // namespace factcheck::evidence

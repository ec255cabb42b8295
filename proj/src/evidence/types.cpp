#include "factcheck/evidence/types.hpp"

#include "factcheck/errors.hpp"
#include "factcheck/evidence/url.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::evidence {

std::string_view QueryKindName(QueryKind kind) {
  switch (kind) {
    case QueryKind::kQuestion: return "Question";
    case QueryKind::kKeyword: return "Keyword";
    case QueryKind::kVerbatimClaim: return "VerbatimClaim";
  }
  return "VerbatimClaim";
}

std::string_view SourceKindName(SourceKind kind) {
  switch (kind) {
    case SourceKind::kWebSearch: return "WebSearch";
    case SourceKind::kEncyclopedia: return "Encyclopedia";
    case SourceKind::kFactCheck: return "FactCheck";
    case SourceKind::kScholarly: return "Scholarly";
  }
  return "WebSearch";
}

SourceKind ParseSourceKind(std::string_view name) {
  if (name == "WebSearch") return SourceKind::kWebSearch;
  if (name == "Encyclopedia") return SourceKind::kEncyclopedia;
  if (name == "FactCheck") return SourceKind::kFactCheck;
  if (name == "Scholarly") return SourceKind::kScholarly;
  throw Error(ErrorCode::kInvalidInput, "unknown source kind: " + std::string(name));
}

EvidenceDoc MakeEvidenceDoc(std::string url, std::string title, std::string content,
                            SourceKind kind, std::string language,
                            std::optional<std::int64_t> citation_count,
                            std::chrono::system_clock::time_point retrieved_at) {
  const std::string host = HostOf(url);
  if (host.empty()) throw Error(ErrorCode::kInvalidInput, "evidence URL is not absolute: " + url);
  if (text::Trim(content).empty()) throw Error(ErrorCode::kInvalidInput, "evidence content is empty: " + url);
  EvidenceDoc doc;
  doc.domain = RegistrableDomain(host);
  doc.url = std::move(url);
  doc.title = std::move(title);
  doc.content = std::move(content);
  doc.source_kind = kind;
  doc.language = std::move(language);
  if (kind == SourceKind::kScholarly) {
    doc.citation_count = std::max<std::int64_t>(0, citation_count.value_or(0));
  }
  doc.retrieved_at = retrieved_at;
  return doc;
}

}  // namespace factcheck::evidence

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "factcheck/claims/types.hpp"
#include "factcheck/evidence/credibility.hpp"
#include "factcheck/evidence/queries.hpp"
#include "factcheck/evidence/search.hpp"
#include "factcheck/evidence/snippets.hpp"
#include "factcheck/model/backends.hpp"

namespace factcheck::evidence {

struct RetrievalConfig {
  std::size_t snippets_per_doc = kDefaultSnippetsPerDoc;
  std::size_t max_snippets = 10;
  std::int64_t min_citations = kDefaultMinCitations;
};

struct EvidenceResult {
  std::vector<Snippet> snippets;
  std::vector<std::string> warnings;
};

// queries -> search (per query, concatenated in query order) -> credibility
// filter -> dedup -> per-doc snippet ranking -> global top max_snippets by
// similarity (ties: earlier doc, then rank).
class EvidenceRetriever {
 public:
  EvidenceRetriever(QueryGenerator queries, AdapterSet adapters, Blocklist blocklist,
                    std::shared_ptr<const model::Embedder> embedder, RetrievalConfig config = {});

  EvidenceResult Retrieve(const claims::Claim& claim) const;

  const Blocklist& blocklist() const { return blocklist_; }

 private:
  QueryGenerator queries_;
  AdapterSet adapters_;
  Blocklist blocklist_;
  std::shared_ptr<const model::Embedder> embedder_;
  RetrievalConfig config_;
};

}  // namespace factcheck::evidence

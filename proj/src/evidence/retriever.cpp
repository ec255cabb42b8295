#include "factcheck/evidence/retriever.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>

#include "factcheck/errors.hpp"
#include "factcheck/evidence/dedup.hpp"

namespace factcheck::evidence {

EvidenceRetriever::EvidenceRetriever(QueryGenerator queries, AdapterSet adapters,
                                     Blocklist blocklist,
                                     std::shared_ptr<const model::Embedder> embedder,
                                     RetrievalConfig config)
    : queries_(std::move(queries)),
      adapters_(std::move(adapters)),
      blocklist_(std::move(blocklist)),
      embedder_(std::move(embedder)),
      config_(config) {}

EvidenceResult EvidenceRetriever::Retrieve(const claims::Claim& claim) const {
  EvidenceResult result;
  const auto queries = queries_.Generate(claim);

  std::vector<EvidenceDoc> found;
  std::size_t failed_queries = 0;
  for (const auto& query : queries) {
    try {
      auto searched = SearchAllSources(query, claim.language, adapters_);
      std::move(searched.docs.begin(), searched.docs.end(), std::back_inserter(found));
      std::move(searched.warnings.begin(), searched.warnings.end(),
                std::back_inserter(result.warnings));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kAllAdaptersFailed) throw;
      ++failed_queries;
      result.warnings.push_back(e.what());
    }
  }
  if (failed_queries == queries.size()) spdlog::warn("no search results for claim {}", claim.id);

  const auto credible = FilterCredible(found, blocklist_, config_.min_citations);
  const auto unique = Deduplicate(credible);
  if (unique.empty()) return result;

  model::EmbeddingVector claim_embedding;
  try {
    const std::string claim_text = claim.enriched_text;
    claim_embedding = embedder_->EmbedTexts(std::span<const std::string>(&claim_text, 1)).at(0);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmbedderUnavailable) throw;
    result.warnings.push_back(std::string("embedder unavailable: ") + e.what());
    return result;
  }

  struct Ranked {
    Snippet snippet;
    std::size_t doc_position;
  };
  std::vector<Ranked> pool;
  for (std::size_t d = 0; d < unique.size(); ++d) {
    auto doc = std::make_shared<const EvidenceDoc>(unique[d]);
    auto ranked = RankSnippets(claim_embedding, doc, *embedder_, config_.snippets_per_doc);
    if (ranked.warning) result.warnings.push_back(*ranked.warning);
    for (auto& s : ranked.snippets) pool.push_back({std::move(s), d});
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Ranked& a, const Ranked& b) {
    if (a.snippet.similarity != b.snippet.similarity) return a.snippet.similarity > b.snippet.similarity;
    if (a.doc_position != b.doc_position) return a.doc_position < b.doc_position;
    return a.snippet.rank < b.snippet.rank;
  });
  if (pool.size() > config_.max_snippets) pool.resize(config_.max_snippets);
  for (auto& r : pool) result.snippets.push_back(std::move(r.snippet));
  return result;
}

}  // namespace factcheck::evidence

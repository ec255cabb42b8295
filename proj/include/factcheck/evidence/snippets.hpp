#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/evidence/types.hpp"
#include "factcheck/model/backends.hpp"

namespace factcheck::evidence {

constexpr std::size_t kDefaultSnippetsPerDoc = 3;

// Paragraphs separated by two or more newlines (blank lines may carry
// spaces). A lone block of more than five sentences is cut into windows of
// three sentences. Every paragraph is a verbatim substring of content.
std::vector<std::string> SplitParagraphs(std::string_view content);

struct RankedSnippets {
  std::vector<Snippet> snippets;
  std::optional<std::string> warning;
};

// Top-k paragraphs of doc by cosine similarity to the claim, ties broken by
// lower paragraph index. An unavailable embedder yields no snippets and a
// warning.
RankedSnippets RankSnippets(std::string_view claim_text, std::shared_ptr<const EvidenceDoc> doc,
                            const model::Embedder& embedder, std::size_t k = kDefaultSnippetsPerDoc);

// As above with a precomputed claim embedding.
RankedSnippets RankSnippets(const model::EmbeddingVector& claim_embedding,
                            std::shared_ptr<const EvidenceDoc> doc, const model::Embedder& embedder,
                            std::size_t k = kDefaultSnippetsPerDoc);

}  // namespace factcheck::evidence

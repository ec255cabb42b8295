#include "factcheck/evidence/snippets.hpp"

#include <algorithm>
#include <numeric>

#include "factcheck/claims/segmenter.hpp"
#include "factcheck/errors.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::evidence {
namespace {

constexpr std::size_t kMaxSentencesPerBlock = 5;
constexpr std::size_t kWindowSentences = 3;

struct Span {
  std::size_t begin;
  std::size_t end;
};

// Trims a code point range to its non-space extent.
Span TrimSpan(const std::u32string& cps, Span s) {
  while (s.begin < s.end && text::IsSpace(cps[s.begin])) ++s.begin;
  while (s.end > s.begin && text::IsSpace(cps[s.end - 1])) --s.end;
  return s;
}

}  // namespace

std::vector<std::string> SplitParagraphs(std::string_view content) {
  const std::u32string cps = text::Decode(content);
  std::vector<Span> blocks;
  std::size_t block_start = 0;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (cps[i] != '\n') {
      ++i;
      continue;
    }
    // Measure a run of newlines that may be separated by other whitespace.
    std::size_t j = i;
    std::size_t newlines = 0;
    while (j < cps.size() && text::IsSpace(cps[j])) {
      if (cps[j] == '\n') ++newlines;
      ++j;
    }
    if (newlines >= 2) {
      blocks.push_back({block_start, i});
      block_start = j;
    }
    i = j;
  }
  blocks.push_back({block_start, cps.size()});

  std::vector<Span> paragraphs;
  for (const auto& b : blocks) {
    const Span t = TrimSpan(cps, b);
    if (t.begin < t.end) paragraphs.push_back(t);
  }

  if (paragraphs.size() == 1) {
    static const claims::RuleSegmenter kSegmenter;
    const Span only = paragraphs.front();
    const std::string block = text::Encode(std::u32string_view(cps).substr(only.begin, only.end - only.begin));
    const auto sentences = kSegmenter.Segment(block, "und");
    if (sentences.size() > kMaxSentencesPerBlock) {
      paragraphs.clear();
      for (std::size_t s = 0; s < sentences.size(); s += kWindowSentences) {
        const std::size_t last = std::min(s + kWindowSentences, sentences.size()) - 1;
        paragraphs.push_back({only.begin + sentences[s].start, only.begin + sentences[last].end});
      }
    }
  }

  std::vector<std::string> out;
  out.reserve(paragraphs.size());
  for (const auto& p : paragraphs) {
    out.push_back(text::Encode(std::u32string_view(cps).substr(p.begin, p.end - p.begin)));
  }
  return out;
}

RankedSnippets RankSnippets(std::string_view claim_text, std::shared_ptr<const EvidenceDoc> doc,
                            const model::Embedder& embedder, std::size_t k) {
  const std::string claim(claim_text);
  try {
    auto embedded = embedder.EmbedTexts(std::span<const std::string>(&claim, 1));
    return RankSnippets(embedded.at(0), std::move(doc), embedder, k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmbedderUnavailable) throw;
    return {{}, std::string("embedder unavailable: ") + e.what()};
  }
}

RankedSnippets RankSnippets(const model::EmbeddingVector& claim_embedding,
                            std::shared_ptr<const EvidenceDoc> doc, const model::Embedder& embedder,
                            std::size_t k) {
  RankedSnippets result;
  const auto paragraphs = SplitParagraphs(doc->content);
  if (paragraphs.empty() || k == 0) return result;

  std::vector<model::EmbeddingVector> vectors;
  try {
    vectors = model::EmbedAll(embedder, paragraphs);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmbedderUnavailable) throw;
    result.warning = "embedder unavailable for " + doc->url + ": " + e.what();
    return result;
  }

  std::vector<double> sims(paragraphs.size());
  for (std::size_t i = 0; i < paragraphs.size(); ++i) {
    sims[i] = model::CosineSimilarity(claim_embedding, vectors[i]);
  }
  std::vector<std::size_t> order(paragraphs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sims[a] > sims[b]; });

  const std::size_t take = std::min(k, order.size());
  for (std::size_t r = 0; r < take; ++r) {
    const std::size_t idx = order[r];
    result.snippets.push_back({doc, idx, paragraphs[idx], sims[idx], static_cast<int>(r + 1)});
  }
  return result;
}

}  // namespace factcheck::evidence

#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/model/backends.hpp"

// Deterministic stand-ins for every model capability. All of them are pure
// functions of their inputs so offline runs are reproducible.
namespace factcheck::model {

// Character-3-gram bag hashed into 64 buckets, L2-normalized.
class MockEmbedder final : public Embedder {
 public:
  static constexpr std::size_t kDimension = 64;

  std::vector<EmbeddingVector> EmbedTexts(std::span<const std::string> texts) const override;

  static EmbeddingVector EmbedOne(std::string_view text);
};

// 1.0 when the text has a digit or a capitalized token after the first
// position, 0.0 otherwise.
class MockTextScorer final : public TextScorer {
 public:
  double ScoreText(ScoreTask task, std::string_view text) const override;

  static bool LooksCheckworthy(std::string_view text);
};

// Token-overlap stance proxy. overlap = |claim ∩ evidence| / |claim| over
// normalized token sets. Refutes iff the evidence contains a negation word
// and overlap >= 0.4 (confidence = overlap); otherwise Supports with
// confidence max(overlap, 0.5).
class MockPairScorer final : public PairScorer {
 public:
  static constexpr double kRefuteOverlap = 0.4;
  static const std::array<std::string_view, 12>& NegationLexicon();

  PairScore ScorePair(PairTask task, std::string_view premise,
                      std::string_view hypothesis) const override;

  static double TokenOverlap(std::string_view claim, std::string_view evidence);
};

// Template generator keyed on the prompt's `#task:` header:
//   coref       -> the #payload header (identity rewrite)
//   query_gen   -> empty (no extra questions)
//   justify     -> "Based on {n} evidence snippets, the claim appears {label}. Top source: {domain}."
//   fix         -> the #payload sentence with numbers replaced from #evidence
//   checkworthy -> "Answer: Yes" / "Answer: No" using the MockTextScorer rule
class MockGenerator final : public Generator {
 public:
  std::string Generate(std::string_view prompt, int max_tokens) const override;

  static std::string JustificationTemplate(std::size_t n, std::string_view label,
                                           std::string_view domain);

  // Replaces each number (digit groups such as "250 000" count as one) in
  // the sentence by the first differing number in the evidence that is
  // followed by the same word. Returns the sentence unchanged when nothing
  // matches.
  static std::string CorrectNumbers(std::string_view sentence,
                                    std::span<const std::string> evidence);
};

}  // namespace factcheck::model

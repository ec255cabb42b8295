#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "factcheck/model/backends.hpp"
#include "factcheck/model/prompt.hpp"
#include "factcheck/veracity/types.hpp"

namespace factcheck::veracity {

struct Aggregate {
  VeracityLabel label = VeracityLabel::kUnverifiable;
  std::size_t supports = 0;
  std::size_t refutes = 0;

  bool operator==(const Aggregate&) const = default;
};

// Majority vote. No verdicts -> Unverifiable. On a tied count the side with
// the larger summed confidence wins; a full tie is Disputed.
Aggregate AggregateStances(std::span<const StanceVerdict> verdicts);

struct VeracityConfig {
  std::size_t max_parallel = 4;
  std::size_t prompt_snippets = 10;
  std::size_t prompt_snippet_chars = 400;
};

class VeracityPredictor {
 public:
  explicit VeracityPredictor(model::ModelGateway models, model::PromptLibrary prompts = {},
                             VeracityConfig config = {});

  // Throws InvalidInput for blank texts; backend failures propagate.
  StanceVerdict ClassifyStance(const claims::Claim& claim, const evidence::Snippet& snippet) const;

  // Throws InvalidInput when snippets is empty. Falls back to the template
  // text when the generator is unavailable.
  std::string GenerateJustification(const claims::Claim& claim, VeracityLabel label,
                                    std::span<const evidence::Snippet> snippets) const;

  // Only meaningful for Disputed claims. Absent when the generator is
  // unavailable or leaves the sentence unchanged.
  std::optional<ClaimFix> SuggestFix(const claims::Claim& claim, VeracityLabel label,
                                     std::span<const evidence::Snippet> snippets) const;

  // Stance per snippet (failed pairs are dropped with a warning), majority
  // vote, justification, and a fix for Disputed claims.
  ClaimReport Verify(const claims::Claim& claim, std::span<const evidence::Snippet> snippets) const;

 private:
  std::string EvidenceBlock(std::span<const evidence::Snippet> snippets) const;
  model::PromptHeaders EvidenceHeaders(std::span<const evidence::Snippet> snippets) const;

  model::ModelGateway models_;
  model::PromptLibrary prompts_;
  VeracityConfig config_;
};

}  // namespace factcheck::veracity

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/claims/segmenter.hpp"
#include "factcheck/claims/types.hpp"
#include "factcheck/model/backends.hpp"
#include "factcheck/model/prompt.hpp"

namespace factcheck::claims {

struct DetectorConfig {
  double threshold = 0.5;
  std::size_t max_parallel = 4;
  // Preceding sentences shown to the coreference prompt.
  std::size_t coref_window = 3;
  // Sentences with fewer whitespace tokens are never check-worthy.
  std::size_t min_tokens = 3;
};

struct CheckworthyResult {
  bool label = false;
  double score = 0.0;
};

// Segments an article, rewrites each sentence into a standalone form, and
// keeps the sentences the classifier considers check-worthy.
class ClaimDetector {
 public:
  ClaimDetector(std::shared_ptr<const Segmenter> segmenter, model::ModelGateway models,
                model::PromptLibrary prompts = {}, DetectorConfig config = {});

  const DetectorConfig& config() const { return config_; }

  std::vector<Sentence> SegmentSentences(std::string_view article, std::string_view language) const;

  // Same length and order as the input. Falls back to the sentence text when
  // the generator is unavailable or returns nothing.
  std::vector<std::string> ResolveCoreferences(const std::vector<Sentence>& sentences,
                                               std::string_view language) const;

  // Throws InvalidInput for blank text and BackendError when the scorer fails.
  CheckworthyResult ClassifyCheckworthy(std::string_view enriched_text,
                                        std::string_view language) const;

  // Claims for check-worthy sentences, plus Failed claims for sentences whose
  // scoring failed. Claim ids are "c<sentence index>", unique per article.
  std::vector<Claim> DetectClaims(std::string_view article, std::string_view language,
                                  std::string_view article_id = {}) const;

 private:
  std::shared_ptr<const Segmenter> segmenter_;
  model::ModelGateway models_;
  model::PromptLibrary prompts_;
  DetectorConfig config_;
};

}  // namespace factcheck::claims

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/claims/detector.hpp"
#include "factcheck/evidence/retriever.hpp"
#include "factcheck/veracity/predictor.hpp"

namespace factcheck::service {

// Detection, retrieval and verification wired together.
class FactCheckPipeline {
 public:
  FactCheckPipeline(claims::ClaimDetector detector, evidence::EvidenceRetriever retriever,
                    veracity::VeracityPredictor predictor);

  std::vector<claims::Claim> Detect(std::string_view article, std::string_view language,
                                    std::string_view article_id) const;

  // Never throws for library errors: a failing claim comes back with status
  // Failed, an Unverifiable label and the error in warnings.
  veracity::ClaimReport Verify(const claims::Claim& claim) const;

  // Detect followed by Verify for every claim, in claim order.
  std::vector<veracity::ClaimReport> Run(std::string_view article, std::string_view language,
                                         std::string_view article_id = {}) const;

 private:
  claims::ClaimDetector detector_;
  evidence::EvidenceRetriever retriever_;
  veracity::VeracityPredictor predictor_;
};

veracity::ClaimReport FailedReport(claims::Claim claim, std::string reason);

}  // namespace factcheck::service

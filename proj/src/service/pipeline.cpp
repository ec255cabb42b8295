#include "factcheck/service/pipeline.hpp"

#include <spdlog/spdlog.h>

#include "factcheck/errors.hpp"

namespace factcheck::service {

FactCheckPipeline::FactCheckPipeline(claims::ClaimDetector detector,
                                     evidence::EvidenceRetriever retriever,
                                     veracity::VeracityPredictor predictor)
    : detector_(std::move(detector)),
      retriever_(std::move(retriever)),
      predictor_(std::move(predictor)) {}

std::vector<claims::Claim> FactCheckPipeline::Detect(std::string_view article,
                                                     std::string_view language,
                                                     std::string_view article_id) const {
  return detector_.DetectClaims(article, language, article_id);
}

veracity::ClaimReport FailedReport(claims::Claim claim, std::string reason) {
  veracity::ClaimReport report;
  claim.status = claims::ClaimStatus::kFailed;
  report.claim = std::move(claim);
  report.justification = std::string(veracity::kNoEvidenceJustification);
  report.warnings.push_back(std::move(reason));
  return report;
}

veracity::ClaimReport FactCheckPipeline::Verify(const claims::Claim& claim) const {
  if (claim.status == claims::ClaimStatus::kFailed) {
    return FailedReport(claim, "check-worthiness scoring failed");
  }
  try {
    evidence::EvidenceResult evidence = retriever_.Retrieve(claim);
    veracity::ClaimReport report = predictor_.Verify(claim, evidence.snippets);
    report.claim.status = claims::ClaimStatus::kVerified;
    report.warnings.insert(report.warnings.begin(), evidence.warnings.begin(),
                           evidence.warnings.end());
    return report;
  } catch (const Error& e) {
    spdlog::warn("claim {} failed: {}", claim.id, e.what());
    return FailedReport(claim, e.what());
  }
}

std::vector<veracity::ClaimReport> FactCheckPipeline::Run(std::string_view article,
                                                          std::string_view language,
                                                          std::string_view article_id) const {
  std::vector<veracity::ClaimReport> reports;
  for (const auto& claim : Detect(article, language, article_id)) reports.push_back(Verify(claim));
  return reports;
}

}  // namespace factcheck::service

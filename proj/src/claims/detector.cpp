#include "factcheck/claims/detector.hpp"

#include <spdlog/spdlog.h>

#include <optional>

#include "factcheck/concurrency.hpp"
#include "factcheck/errors.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::claims {

ClaimDetector::ClaimDetector(std::shared_ptr<const Segmenter> segmenter, model::ModelGateway models,
                             model::PromptLibrary prompts, DetectorConfig config)
    : segmenter_(std::move(segmenter)),
      models_(std::move(models)),
      prompts_(std::move(prompts)),
      config_(config) {}

std::vector<Sentence> ClaimDetector::SegmentSentences(std::string_view article,
                                                      std::string_view language) const {
  return segmenter_->Segment(article, language);
}

std::vector<std::string> ClaimDetector::ResolveCoreferences(const std::vector<Sentence>& sentences,
                                                            std::string_view language) const {
  std::vector<std::string> out;
  out.reserve(sentences.size());
  bool generator_down = !models_.generator;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const std::string& original = sentences[i].text;
    if (generator_down) {
      out.push_back(original);
      continue;
    }
    std::string context;
    const std::size_t first = i > config_.coref_window ? i - config_.coref_window : 0;
    for (std::size_t j = first; j < i; ++j) {
      if (!context.empty()) context += ' ';
      context += sentences[j].text;
    }
    const std::string body = prompts_.Render(
        "coref", {{"context", context}, {"sentence", original}, {"language", std::string(language)}});
    const std::string prompt = model::BuildPrompt(
        "coref", {{"payload", original}, {"context", context}, {"language", std::string(language)}},
        body);
    try {
      std::string rewritten = text::CollapseWhitespace(models_.generator->Generate(prompt, 256));
      out.push_back(rewritten.empty() ? original : std::move(rewritten));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kGeneratorUnavailable) throw;
      spdlog::warn("coreference generator unavailable, keeping original sentences: {}", e.what());
      generator_down = true;
      out.push_back(original);
    }
  }
  return out;
}

CheckworthyResult ClaimDetector::ClassifyCheckworthy(std::string_view enriched_text,
                                                     std::string_view) const {
  if (text::Trim(enriched_text).empty()) {
    throw Error(ErrorCode::kInvalidInput, "check-worthiness needs non-empty text");
  }
  if (text::SplitWhitespace(enriched_text).size() < config_.min_tokens) return {false, 0.0};
  const double score = models_.scorer->ScoreText(model::ScoreTask::kCheckworthy, enriched_text);
  return {score >= config_.threshold, score};
}

std::vector<Claim> ClaimDetector::DetectClaims(std::string_view article, std::string_view language,
                                               std::string_view article_id) const {
  const auto sentences = SegmentSentences(article, language);
  if (sentences.empty()) return {};
  const auto enriched = ResolveCoreferences(sentences, language);

  std::vector<std::optional<Claim>> slots(sentences.size());
  ParallelFor(sentences.size(), config_.max_parallel, [&](std::size_t i) {
    Claim claim;
    claim.id = "c" + std::to_string(i);
    claim.article_id = std::string(article_id);
    claim.sentence = sentences[i];
    claim.enriched_text = enriched[i];
    claim.language = std::string(language);
    try {
      const auto result = ClassifyCheckworthy(enriched[i], language);
      if (!result.label) return;
      claim.checkworthy_score = result.score;
      claim.status = ClaimStatus::kDetected;
    } catch (const Error& e) {
      spdlog::warn("check-worthiness scoring failed for sentence {}: {}", i, e.what());
      claim.status = ClaimStatus::kFailed;
    }
    slots[i] = std::move(claim);
  });

  std::vector<Claim> claims;
  for (auto& slot : slots) {
    if (slot) claims.push_back(std::move(*slot));
  }
  return claims;
}

}  // namespace factcheck::claims

#include "factcheck/veracity/predictor.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>

#include "factcheck/concurrency.hpp"
#include "factcheck/errors.hpp"
#include "factcheck/model/mock_backends.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::veracity {
namespace {

std::string Clip(std::string_view s, std::size_t max_chars) {
  const std::u32string cps = text::Decode(s);
  if (cps.size() <= max_chars) return std::string(s);
  return text::Encode(std::u32string_view(cps).substr(0, max_chars));
}

}  // namespace

std::string_view VeracityLabelName(VeracityLabel label) {
  switch (label) {
    case VeracityLabel::kSupported: return "Supported";
    case VeracityLabel::kDisputed: return "Disputed";
    case VeracityLabel::kUnverifiable: return "Unverifiable";
  }
  return "Unverifiable";
}

VeracityLabel ParseVeracityLabel(std::string_view name) {
  if (name == "Supported") return VeracityLabel::kSupported;
  if (name == "Disputed") return VeracityLabel::kDisputed;
  if (name == "Unverifiable") return VeracityLabel::kUnverifiable;
  throw Error(ErrorCode::kInvalidInput, "unknown veracity label: " + std::string(name));
}

Aggregate AggregateStances(std::span<const StanceVerdict> verdicts) {
  Aggregate out;
  double support_conf = 0.0, refute_conf = 0.0;
  for (const auto& v : verdicts) {
    if (v.label == StanceLabel::kSupports) {
      ++out.supports;
      support_conf += v.confidence;
    } else {
      ++out.refutes;
      refute_conf += v.confidence;
    }
  }
  if (verdicts.empty()) {
    out.label = VeracityLabel::kUnverifiable;
  } else if (out.supports != out.refutes) {
    out.label = out.supports > out.refutes ? VeracityLabel::kSupported : VeracityLabel::kDisputed;
  } else {
    out.label = support_conf > refute_conf ? VeracityLabel::kSupported : VeracityLabel::kDisputed;
  }
  return out;
}

VeracityPredictor::VeracityPredictor(model::ModelGateway models, model::PromptLibrary prompts,
                                     VeracityConfig config)
    : models_(std::move(models)), prompts_(std::move(prompts)), config_(config) {}

StanceVerdict VeracityPredictor::ClassifyStance(const claims::Claim& claim,
                                                const evidence::Snippet& snippet) const {
  if (text::Trim(claim.enriched_text).empty() || text::Trim(snippet.text).empty()) {
    throw Error(ErrorCode::kInvalidInput, "stance needs non-empty claim and snippet");
  }
  const auto score = models_.nli->ScorePair(model::PairTask::kStance, snippet.text, claim.enriched_text);
  return {claim.id, snippet, score.label, std::clamp(score.confidence, 0.0, 1.0)};
}

std::string VeracityPredictor::EvidenceBlock(std::span<const evidence::Snippet> snippets) const {
  std::string block;
  const std::size_t n = std::min(snippets.size(), config_.prompt_snippets);
  for (std::size_t i = 0; i < n; ++i) {
    block += "[" + std::to_string(i + 1) + "] " + Clip(snippets[i].text, config_.prompt_snippet_chars);
    if (snippets[i].doc) block += " (" + snippets[i].doc->domain + ")";
    block += '\n';
  }
  return block;
}

model::PromptHeaders VeracityPredictor::EvidenceHeaders(
    std::span<const evidence::Snippet> snippets) const {
  model::PromptHeaders headers;
  const std::size_t n = std::min(snippets.size(), config_.prompt_snippets);
  for (std::size_t i = 0; i < n; ++i) {
    headers.emplace_back("evidence", Clip(snippets[i].text, config_.prompt_snippet_chars));
  }
  return headers;
}

std::string VeracityPredictor::GenerateJustification(const claims::Claim& claim, VeracityLabel label,
                                                     std::span<const evidence::Snippet> snippets) const {
  if (snippets.empty()) throw Error(ErrorCode::kInvalidInput, "justification needs evidence");
  const std::size_t n = std::min(snippets.size(), config_.prompt_snippets);
  const std::string label_name(VeracityLabelName(label));
  const std::string domain = snippets.front().doc ? snippets.front().doc->domain : "";
  const std::string fallback = model::MockGenerator::JustificationTemplate(n, label_name, domain);
  if (!models_.generator) return fallback;

  model::PromptHeaders headers = {{"payload", claim.enriched_text},
                                  {"label", label_name},
                                  {"n", std::to_string(n)},
                                  {"domain", domain}};
  const std::string body = prompts_.Render(
      "justify", {{"claim", claim.enriched_text}, {"label", label_name},
                  {"language", claim.language}, {"evidence", EvidenceBlock(snippets)}});
  try {
    std::string summary(text::Trim(models_.generator->Generate(model::BuildPrompt("justify", headers, body), 300)));
    return summary.empty() ? fallback : summary;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGeneratorUnavailable) throw;
    spdlog::warn("justification generator unavailable for claim {}: {}", claim.id, e.what());
    return fallback;
  }
}

std::optional<ClaimFix> VeracityPredictor::SuggestFix(const claims::Claim& claim, VeracityLabel label,
                                                      std::span<const evidence::Snippet> snippets) const {
  if (label != VeracityLabel::kDisputed || !models_.generator || snippets.empty()) return std::nullopt;
  const std::string& original = claim.sentence.text;
  model::PromptHeaders headers = {{"payload", original}};
  const auto evidence = EvidenceHeaders(snippets);
  headers.insert(headers.end(), evidence.begin(), evidence.end());
  const std::string body =
      prompts_.Render("fix", {{"claim", original}, {"language", claim.language},
                              {"evidence", EvidenceBlock(snippets)}});
  std::string corrected;
  try {
    corrected = std::string(text::Trim(models_.generator->Generate(model::BuildPrompt("fix", headers, body), 300)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGeneratorUnavailable) throw;
    spdlog::warn("fix generator unavailable for claim {}: {}", claim.id, e.what());
    return std::nullopt;
  }
  if (corrected.empty() || corrected == original) return std::nullopt;
  ClaimFix fix{corrected, DiffSpans(original, corrected)};
  if (fix.edits.empty()) return std::nullopt;
  return fix;
}

ClaimReport VeracityPredictor::Verify(const claims::Claim& claim,
                                      std::span<const evidence::Snippet> snippets) const {
  ClaimReport report;
  report.claim = claim;

  std::vector<std::optional<StanceVerdict>> slots(snippets.size());
  std::vector<std::string> failures(snippets.size());
  ParallelFor(snippets.size(), config_.max_parallel, [&](std::size_t i) {
    try {
      slots[i] = ClassifyStance(claim, snippets[i]);
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < snippets.size(); ++i) {
    if (slots[i]) {
      report.verdicts.push_back(std::move(*slots[i]));
    } else {
      spdlog::warn("stance failed for claim {} snippet {}: {}", claim.id, i, failures[i]);
      report.warnings.push_back("stance failed: " + failures[i]);
    }
  }

  const Aggregate agg = AggregateStances(report.verdicts);
  report.label = agg.label;
  report.supports_count = agg.supports;
  report.refutes_count = agg.refutes;
  if (agg.label == VeracityLabel::kUnverifiable) {
    report.justification = std::string(kNoEvidenceJustification);
    return report;
  }
  std::vector<evidence::Snippet> used;
  used.reserve(report.verdicts.size());
  for (const auto& v : report.verdicts) used.push_back(v.snippet);
  report.justification = GenerateJustification(claim, agg.label, used);
  report.fix = SuggestFix(claim, agg.label, used);
  return report;
}

}  // namespace factcheck::veracity

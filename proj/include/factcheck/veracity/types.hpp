#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/claims/types.hpp"
#include "factcheck/evidence/types.hpp"
#include "factcheck/model/backends.hpp"
#include "factcheck/veracity/diff.hpp"

namespace factcheck::veracity {

using model::StanceLabel;

struct StanceVerdict {
  std::string claim_id;
  evidence::Snippet snippet;
  StanceLabel label = StanceLabel::kSupports;
  double confidence = 0.0;
};

enum class VeracityLabel { kSupported, kDisputed, kUnverifiable };

std::string_view VeracityLabelName(VeracityLabel label);
VeracityLabel ParseVeracityLabel(std::string_view name);

struct ClaimFix {
  std::string corrected_text;
  std::vector<SpanEdit> edits;

  bool operator==(const ClaimFix&) const = default;
};

// supports_count + refutes_count == verdicts.size(); label is Unverifiable
// iff there are no verdicts; fix only accompanies Disputed.
struct ClaimReport {
  claims::Claim claim;
  VeracityLabel label = VeracityLabel::kUnverifiable;
  std::size_t supports_count = 0;
  std::size_t refutes_count = 0;
  std::vector<StanceVerdict> verdicts;
  std::string justification;
  std::optional<ClaimFix> fix;
  std::vector<std::string> warnings;
};

inline constexpr std::string_view kNoEvidenceJustification = "No evidence found.";

}  // namespace factcheck::veracity

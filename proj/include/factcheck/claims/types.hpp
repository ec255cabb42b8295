#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace factcheck::claims {

// Offsets count Unicode code points into the article.
struct Sentence {
  std::size_t index = 0;
  std::string text;
  std::size_t start = 0;  // inclusive
  std::size_t end = 0;    // exclusive

  bool operator==(const Sentence&) const = default;
};

enum class ClaimStatus { kDetected, kVerifying, kVerified, kFailed };

std::string_view ClaimStatusName(ClaimStatus status);
ClaimStatus ParseClaimStatus(std::string_view name);

struct Claim {
  std::string id;
  std::string article_id;
  Sentence sentence;
  std::string enriched_text;  // equals sentence.text when nothing was resolved
  std::string language;
  double checkworthy_score = 0.0;
  ClaimStatus status = ClaimStatus::kDetected;

  bool operator==(const Claim&) const = default;
};

}  // namespace factcheck::claims

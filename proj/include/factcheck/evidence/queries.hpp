#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/claims/types.hpp"
#include "factcheck/evidence/types.hpp"
#include "factcheck/model/backends.hpp"
#include "factcheck/model/prompt.hpp"

namespace factcheck::evidence {

bool IsStopword(std::string_view language, std::string_view normalized_token);

// Claim text with stopwords and edge punctuation removed, original casing
// kept. Falls back to the collapsed input when every token is a stopword.
std::string KeywordQuery(std::string_view text, std::string_view language);

class QueryGenerator {
 public:
  explicit QueryGenerator(std::shared_ptr<const model::Generator> generator,
                          model::PromptLibrary prompts = {});

  // [VerbatimClaim, Keyword, Question...]. Questions are completion lines
  // ending in '?'; generator failures leave only the first two.
  // Throws InvalidClaim when the enriched text is blank.
  std::vector<SearchQuery> Generate(const claims::Claim& claim) const;

 private:
  std::shared_ptr<const model::Generator> generator_;
  model::PromptLibrary prompts_;
};

}  // namespace factcheck::evidence

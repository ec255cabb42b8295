#include "factcheck/evidence/queries.hpp"

#include <spdlog/spdlog.h>

#include <map>
#include <set>

#include "factcheck/errors.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::evidence {
namespace {

using StopwordMap = std::map<std::string, std::set<std::string, std::less<>>, std::less<>>;

const StopwordMap& Stopwords() {
  static const StopwordMap kStopwords = {
      {"en", {"a", "an", "the", "and", "or", "but", "of", "in", "on", "at", "to", "for", "from",
              "by", "with", "about", "as", "into", "is", "are", "was", "were", "be", "been", "being",
              "has", "have", "had", "do", "does", "did", "it", "its", "this", "that", "these",
              "those", "there", "their", "they", "he", "she", "his", "her", "we", "our", "you",
              "your", "i", "my", "me", "which", "who", "whom", "what", "than", "then", "so", "such",
              "will", "would", "can", "could", "should", "may", "might", "also", "very", "some",
              "approximately", "about", "around"}},
      {"no", {"og", "i", "på", "er", "en", "et", "ei", "den", "det", "de", "som", "med", "for",
              "til", "av", "har", "hadde", "var", "være", "blir", "ble", "om", "fra", "at", "men",
              "eller", "så", "seg", "sin", "sitt", "sine", "han", "hun", "vi", "dere", "jeg",
              "cirka", "omtrent", "også", "enn"}},
      {"de", {"der", "die", "das", "und", "oder", "ist", "sind", "war", "waren", "ein", "eine",
              "einen", "einem", "einer", "in", "im", "auf", "an", "am", "zu", "zum", "zur", "von",
              "vom", "mit", "für", "hat", "haben", "hatte", "es", "er", "sie", "wir", "den", "dem",
              "des", "als", "auch", "etwa", "rund", "ungefähr"}},
      {"da", {"og", "i", "på", "er", "en", "et", "den", "det", "de", "som", "med", "for", "til",
              "af", "har", "havde", "var", "være", "bliver", "blev", "om", "fra", "at", "men",
              "eller", "så", "sig", "han", "hun", "vi", "jeg", "cirka", "omkring", "også"}},
      {"fr", {"le", "la", "les", "un", "une", "des", "du", "de", "et", "ou", "est", "sont", "était",
              "a", "ont", "avait", "en", "dans", "sur", "au", "aux", "pour", "par", "avec", "il",
              "elle", "ils", "elles", "nous", "vous", "que", "qui", "ce", "cette", "environ"}},
      {"es", {"el", "la", "los", "las", "un", "una", "unos", "unas", "y", "o", "es", "son", "era",
              "fue", "ha", "han", "tiene", "tienen", "de", "del", "en", "por", "para", "con", "al",
              "que", "se", "su", "sus", "lo", "como", "aproximadamente", "unos"}},
  };
  return kStopwords;
}

std::string PrimaryTag(std::string_view language) {
  return text::ToLower(language.substr(0, language.find_first_of("-_")));
}

}  // namespace

bool IsStopword(std::string_view language, std::string_view normalized_token) {
  const auto& all = Stopwords();
  std::string lang = PrimaryTag(language);
  if (lang == "nb" || lang == "nn") lang = "no";
  auto it = all.find(lang);
  if (it == all.end()) it = all.find("en");
  return it->second.count(normalized_token) > 0;
}

std::string KeywordQuery(std::string_view input, std::string_view language) {
  std::string out;
  for (const auto& token : text::SplitWhitespace(input)) {
    const std::string normalized = text::NormalizeToken(token);
    if (normalized.empty() || IsStopword(language, normalized)) continue;
    std::u32string cps = text::Decode(token);
    std::size_t b = 0, e = cps.size();
    while (b < e && text::IsPunct(cps[b])) ++b;
    while (e > b && text::IsPunct(cps[e - 1])) --e;
    if (!out.empty()) out += ' ';
    out += text::Encode(std::u32string_view(cps).substr(b, e - b));
  }
  if (out.empty()) out = text::CollapseWhitespace(input);
  return text::TruncateAtWord(out, SearchQuery::kMaxChars);
}

QueryGenerator::QueryGenerator(std::shared_ptr<const model::Generator> generator,
                               model::PromptLibrary prompts)
    : generator_(std::move(generator)), prompts_(std::move(prompts)) {}

std::vector<SearchQuery> QueryGenerator::Generate(const claims::Claim& claim) const {
  const std::string claim_text = text::CollapseWhitespace(claim.enriched_text);
  if (claim_text.empty()) throw Error(ErrorCode::kInvalidClaim, "claim has empty enriched text");

  std::vector<SearchQuery> queries;
  queries.push_back({claim.id, text::TruncateAtWord(claim_text, SearchQuery::kMaxChars),
                     QueryKind::kVerbatimClaim});
  queries.push_back({claim.id, KeywordQuery(claim_text, claim.language), QueryKind::kKeyword});

  if (!generator_) return queries;
  const std::string body =
      prompts_.Render("query_gen", {{"claim", claim_text}, {"language", claim.language}});
  const std::string prompt = model::BuildPrompt(
      "query_gen", {{"payload", claim_text}, {"language", claim.language}}, body);
  std::string completion;
  try {
    completion = generator_->Generate(prompt, 200);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kGeneratorUnavailable) throw;
    spdlog::warn("query generator unavailable for claim {}: {}", claim.id, e.what());
    return queries;
  }
  std::set<std::string> seen;
  std::size_t pos = 0;
  while (pos <= completion.size()) {
    auto eol = completion.find('\n', pos);
    if (eol == std::string::npos) eol = completion.size();
    std::string line = text::CollapseWhitespace(std::string_view(completion).substr(pos, eol - pos));
    // Drop list markers such as "1." or "-".
    if (!line.empty() && (line.front() == '-' || line.front() == '*')) {
      line = text::CollapseWhitespace(std::string_view(line).substr(1));
    } else {
      std::size_t digits = 0;
      while (digits < line.size() && std::isdigit(static_cast<unsigned char>(line[digits]))) ++digits;
      if (digits > 0 && digits + 1 < line.size() && (line[digits] == '.' || line[digits] == ')') &&
          line[digits + 1] == ' ') {
        line = text::CollapseWhitespace(std::string_view(line).substr(digits + 1));
      }
    }
    const bool question = !line.empty() && (line.back() == '?' || (line.size() >= 3 &&
                                            line.compare(line.size() - 3, 3, "\xEF\xBC\x9F") == 0));
    if (question && seen.insert(line).second) {
      queries.push_back({claim.id, text::TruncateAtWord(line, SearchQuery::kMaxChars),
                         QueryKind::kQuestion});
    }
    pos = eol + 1;
  }
  return queries;
}

}  // namespace factcheck::evidence

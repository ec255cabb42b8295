#include "factcheck/model/mock_backends.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "factcheck/errors.hpp"
#include "factcheck/hash.hpp"
#include "factcheck/model/prompt.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::model {
namespace {

bool HasNumericCore(std::u32string_view cps) {
  bool digit = false;
  for (char32_t c : cps) {
    if (text::IsDigit(c)) {
      digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit;
}

struct Token {
  std::size_t start = 0;  // code points
  std::size_t end = 0;
};

std::vector<Token> TokenSpans(std::u32string_view cps) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && text::IsSpace(cps[i])) ++i;
    if (i >= cps.size()) break;
    const std::size_t start = i;
    while (i < cps.size() && !text::IsSpace(cps[i])) ++i;
    out.push_back({start, i});
  }
  return out;
}

// Token span with surrounding punctuation removed.
Token CoreSpan(std::u32string_view cps, Token t) {
  while (t.start < t.end && text::IsPunct(cps[t.start])) ++t.start;
  while (t.end > t.start && text::IsPunct(cps[t.end - 1])) --t.end;
  return t;
}

struct NumberRun {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string value;
  std::string anchor;
};

// A number is a numeric token optionally followed by space-separated groups
// of exactly three digits ("250 000").
std::vector<NumberRun> FindNumbers(std::u32string_view cps) {
  const auto tokens = TokenSpans(cps);
  std::vector<NumberRun> runs;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const Token core = CoreSpan(cps, tokens[i]);
    if (core.start == core.end || !HasNumericCore(cps.substr(core.start, core.end - core.start))) {
      ++i;
      continue;
    }
    NumberRun run{core.start, core.end, {}, {}};
    std::size_t j = i + 1;
    // Only extend when the previous token had no trailing punctuation.
    while (j < tokens.size() && CoreSpan(cps, tokens[j - 1]).end == tokens[j - 1].end) {
      const Token next = tokens[j];
      const Token next_core = CoreSpan(cps, next);
      if (next_core.start != next.start || next_core.end - next_core.start != 3) break;
      bool all_digits = true;
      for (std::size_t k = next_core.start; k < next_core.end; ++k) {
        all_digits = all_digits && text::IsDigit(cps[k]);
      }
      if (!all_digits) break;
      run.end = next_core.end;
      ++j;
    }
    run.value = text::Encode(cps.substr(run.start, run.end - run.start));
    if (j < tokens.size()) {
      run.anchor = text::NormalizeToken(
          text::Encode(cps.substr(tokens[j].start, tokens[j].end - tokens[j].start)));
    }
    if (run.anchor.empty() && i > 0) {
      run.anchor = "<" + text::NormalizeToken(text::Encode(
                             cps.substr(tokens[i - 1].start, tokens[i - 1].end - tokens[i - 1].start)));
    }
    runs.push_back(std::move(run));
    i = j;
  }
  return runs;
}

}  // namespace

std::vector<EmbeddingVector> MockEmbedder::EmbedTexts(std::span<const std::string> texts) const {
  if (texts.size() > kMaxBatch) {
    throw Error(ErrorCode::kInvalidInput, "embedding batch exceeds " + std::to_string(kMaxBatch));
  }
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(EmbedOne(t));
  return out;
}

EmbeddingVector MockEmbedder::EmbedOne(std::string_view input) {
  if (input.empty()) throw Error(ErrorCode::kInvalidInput, "cannot embed empty text");
  const std::u32string cps = text::Decode(input);
  std::vector<double> buckets(kDimension, 0.0);
  const std::size_t gram = std::min<std::size_t>(3, cps.size());
  for (std::size_t i = 0; i + gram <= cps.size(); ++i) {
    const std::string key = text::Encode(std::u32string_view(cps).substr(i, gram));
    buckets[Fnv1a64(key) % kDimension] += 1.0;
  }
  return Normalized(std::move(buckets));
}

bool MockTextScorer::LooksCheckworthy(std::string_view input) {
  const auto tokens = text::SplitWhitespace(input);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::u32string cps = text::Decode(tokens[i]);
    if (std::any_of(cps.begin(), cps.end(), text::IsDigit)) return true;
    if (i == 0) continue;
    const auto first = std::find_if(cps.begin(), cps.end(), text::IsLetter);
    if (first != cps.end() && text::IsUpper(*first)) return true;
  }
  return false;
}

double MockTextScorer::ScoreText(ScoreTask, std::string_view input) const {
  return LooksCheckworthy(input) ? 1.0 : 0.0;
}

const std::array<std::string_view, 12>& MockPairScorer::NegationLexicon() {
  static constexpr std::array<std::string_view, 12> kLexicon = {
      "not", "no", "never", "ikke", "aldri", "nicht", "kein", "pas", "jamais", "nunca", "non",
      "не"};
  return kLexicon;
}

double MockPairScorer::TokenOverlap(std::string_view claim, std::string_view evidence) {
  const auto claim_tokens = text::NormalizedTokens(claim);
  const auto evidence_tokens = text::NormalizedTokens(evidence);
  const std::set<std::string> claim_set(claim_tokens.begin(), claim_tokens.end());
  const std::set<std::string> evidence_set(evidence_tokens.begin(), evidence_tokens.end());
  if (claim_set.empty()) return 0.0;
  std::size_t shared = 0;
  for (const auto& t : claim_set) shared += evidence_set.count(t);
  return static_cast<double>(shared) / static_cast<double>(claim_set.size());
}

PairScore MockPairScorer::ScorePair(PairTask, std::string_view premise,
                                    std::string_view hypothesis) const {
  if (text::Trim(premise).empty() || text::Trim(hypothesis).empty()) {
    throw Error(ErrorCode::kInvalidInput, "stance pair requires non-empty texts");
  }
  const double overlap = TokenOverlap(hypothesis, premise);
  bool negated = false;
  for (const auto& tok : text::NormalizedTokens(premise)) {
    const auto& lex = NegationLexicon();
    if (std::find(lex.begin(), lex.end(), tok) != lex.end()) {
      negated = true;
      break;
    }
  }
  if (negated && overlap >= kRefuteOverlap) return {StanceLabel::kRefutes, overlap};
  return {StanceLabel::kSupports, std::max(overlap, 0.5)};
}

std::string MockGenerator::JustificationTemplate(std::size_t n, std::string_view label,
                                                 std::string_view domain) {
  return "Based on " + std::to_string(n) + " evidence snippets, the claim appears " +
         std::string(label) + ". Top source: " + std::string(domain) + ".";
}

std::string MockGenerator::CorrectNumbers(std::string_view sentence,
                                          std::span<const std::string> evidence) {
  const std::u32string cps = text::Decode(sentence);
  const auto claim_numbers = FindNumbers(cps);
  std::vector<std::vector<NumberRun>> evidence_numbers;
  for (const auto& e : evidence) evidence_numbers.push_back(FindNumbers(text::Decode(e)));

  std::u32string out;
  std::size_t cursor = 0;
  for (const auto& number : claim_numbers) {
    std::optional<std::string> replacement;
    for (const auto& runs : evidence_numbers) {
      for (const auto& candidate : runs) {
        if (!number.anchor.empty() && candidate.anchor == number.anchor &&
            candidate.value != number.value) {
          replacement = candidate.value;
          break;
        }
      }
      if (replacement) break;
    }
    if (!replacement) continue;
    out.append(cps, cursor, number.start - cursor);
    out += text::Decode(*replacement);
    cursor = number.end;
  }
  out.append(cps, cursor, std::u32string::npos);
  return text::Encode(out);
}

std::string MockGenerator::Generate(std::string_view prompt, int) const {
  if (prompt.empty()) throw Error(ErrorCode::kInvalidInput, "empty prompt");
  const ParsedPrompt parsed = ParsePrompt(prompt);
  const std::string* payload = parsed.Get("payload");
  if (parsed.task == "coref") return payload ? *payload : std::string();
  if (parsed.task == "query_gen") return {};
  if (parsed.task == "justify") {
    const std::string* n = parsed.Get("n");
    const std::string* label = parsed.Get("label");
    const std::string* domain = parsed.Get("domain");
    return JustificationTemplate(n ? std::stoul(*n) : 0, label ? *label : "", domain ? *domain : "");
  }
  if (parsed.task == "fix") {
    if (!payload) return {};
    return CorrectNumbers(*payload, parsed.GetAll("evidence"));
  }
  if (parsed.task == "checkworthy") {
    const std::string* sentence = parsed.Get("payload");
    const bool yes = sentence && MockTextScorer::LooksCheckworthy(*sentence);
    return yes ? "The sentence states a verifiable fact.\nAnswer: Yes"
               : "The sentence does not state a verifiable fact.\nAnswer: No";
  }
  return payload ? *payload : parsed.body;
}

}  // namespace factcheck::model

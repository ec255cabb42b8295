#include "factcheck/service/language.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "factcheck/text/utf8.hpp"

namespace factcheck::service {

std::vector<std::u32string> LanguageIdentifier::RankedTrigrams(std::string_view input,
                                                               std::size_t limit) {
  std::u32string folded = U" ";
  for (char32_t c : text::Decode(input)) {
    if (text::IsLetter(c)) {
      folded += text::ToLower(c);
    } else if (folded.back() != U' ') {
      folded += U' ';
    }
  }
  if (folded.back() != U' ') folded += U' ';

  std::map<std::u32string, std::size_t> counts;
  for (std::size_t i = 0; i + 3 <= folded.size(); ++i) {
    std::u32string gram = folded.substr(i, 3);
    if (gram == U"   " || gram[1] == U' ') continue;
    ++counts[std::move(gram)];
  }
  std::vector<std::pair<std::u32string, std::size_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > limit) ranked.resize(limit);
  std::vector<std::u32string> out;
  out.reserve(ranked.size());
  for (auto& [gram, _] : ranked) out.push_back(std::move(gram));
  return out;
}

LanguageIdentifier LanguageIdentifier::LoadDirectory(const std::filesystem::path& dir) {
  LanguageIdentifier id;
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) return id;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".txt") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    id.AddProfile(entry.path().stem().string(), ss.str());
  }
  return id;
}

void LanguageIdentifier::AddProfile(std::string language, std::string_view sample) {
  std::map<std::u32string, std::size_t> ranks;
  const auto ranked = RankedTrigrams(sample, kProfileSize);
  for (std::size_t i = 0; i < ranked.size(); ++i) ranks.emplace(ranked[i], i);
  profiles_[std::move(language)] = std::move(ranks);
}

std::vector<LanguageIdentifier::Score> LanguageIdentifier::Scores(std::string_view input) const {
  const auto doc = RankedTrigrams(input, kProfileSize);
  std::vector<Score> scores;
  if (doc.empty()) return scores;
  for (const auto& [lang, profile] : profiles_) {
    const std::size_t max_penalty = kProfileSize;
    std::size_t distance = 0;
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const auto it = profile.find(doc[i]);
      distance += it == profile.end() ? max_penalty
                                      : static_cast<std::size_t>(std::abs(
                                            static_cast<long>(it->second) - static_cast<long>(i)));
    }
    scores.push_back({lang, static_cast<double>(distance) / static_cast<double>(doc.size() * max_penalty)});
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const Score& a, const Score& b) { return a.distance < b.distance; });
  return scores;
}

std::string LanguageIdentifier::Detect(std::string_view input) const {
  if (RankedTrigrams(input, kMinTrigrams).size() < kMinTrigrams) return std::string(kFallback);
  const auto scores = Scores(input);
  if (scores.empty() || scores.front().distance >= kConfidenceFloor) return std::string(kFallback);
  return scores.front().language;
}

std::vector<std::string> LanguageIdentifier::languages() const {
  std::vector<std::string> out;
  for (const auto& [lang, _] : profiles_) out.push_back(lang);
  return out;
}

}  // namespace factcheck::service

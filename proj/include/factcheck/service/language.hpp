#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace factcheck::service {

// Character-trigram language identification (rank-order "out of place"
// distance). Profiles are built from sample texts in `<dir>/<lang>.txt`.
class LanguageIdentifier {
 public:
  static constexpr std::size_t kProfileSize = 300;
  static constexpr std::size_t kMinTrigrams = 20;
  // Best distance must be below this fraction of the maximum possible.
  static constexpr double kConfidenceFloor = 0.85;
  static constexpr std::string_view kFallback = "en";

  LanguageIdentifier() = default;

  static LanguageIdentifier LoadDirectory(const std::filesystem::path& dir);

  void AddProfile(std::string language, std::string_view sample);

  // Lowercased letters with every non-letter run folded to one space and the
  // text padded by a space on both sides; trigrams with a space in the
  // middle are skipped. Ordered by descending count, ties by code point order.
  static std::vector<std::u32string> RankedTrigrams(std::string_view text, std::size_t limit);

  // "en" for short or ambiguous input.
  std::string Detect(std::string_view text) const;

  struct Score {
    std::string language;
    double distance;  // normalized to [0, 1]
  };
  std::vector<Score> Scores(std::string_view text) const;

  std::vector<std::string> languages() const;

 private:
  std::map<std::string, std::map<std::u32string, std::size_t>> profiles_;
};

}  // namespace factcheck::service

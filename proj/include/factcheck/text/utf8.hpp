#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

// Minimal UTF-8 handling and a few Unicode character classes covering the
// scripts the pipeline ships rules for (Latin, Greek, Cyrillic, Devanagari,
// CJK). Invalid byte sequences decode to U+FFFD one byte at a time.
namespace factcheck::text {

std::u32string Decode(std::string_view utf8);
std::string Encode(std::u32string_view codepoints);
void AppendUtf8(std::string& out, char32_t cp);

// Number of code points in a UTF-8 string.
std::size_t Length(std::string_view utf8);

bool IsSpace(char32_t c);
bool IsDigit(char32_t c);
bool IsUpper(char32_t c);
bool IsLetter(char32_t c);
bool IsPunct(char32_t c);
char32_t ToLower(char32_t c);

std::string ToLower(std::string_view utf8);

// Trims leading and trailing Unicode whitespace.
std::string_view Trim(std::string_view utf8);

// Collapses every whitespace run into one ASCII space and trims the ends.
std::string CollapseWhitespace(std::string_view utf8);

// Whitespace-delimited tokens.
std::vector<std::string> SplitWhitespace(std::string_view utf8);

// Lowercased token with leading/trailing punctuation removed; empty when the
// token was pure punctuation.
std::string NormalizeToken(std::string_view token);

// Normalized, non-empty tokens of a text.
std::vector<std::string> NormalizedTokens(std::string_view utf8);

// Truncates to at most max_chars code points, cutting at the last whitespace
// boundary when one exists inside the limit.
std::string TruncateAtWord(std::string_view utf8, std::size_t max_chars);

// Replaces `{name}` placeholders using the supplied lookup. Unknown
// placeholders are left untouched.
template <typename Lookup>
std::string Substitute(std::string_view tmpl, Lookup&& lookup) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      const auto close = tmpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        const std::string_view key = tmpl.substr(i + 1, close - i - 1);
        if (const std::string* value = lookup(key)) {
          out += *value;
          i = close + 1;
          continue;
        }
      }
    }
    out += tmpl[i++];
  }
  return out;
}

}  // namespace factcheck::text

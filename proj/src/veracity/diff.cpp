#include "factcheck/veracity/diff.hpp"

#include <algorithm>
#include <cstdint>

#include "factcheck/errors.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::veracity {
namespace {

struct Token {
  std::size_t start;
  std::size_t end;
};

bool IsGroupSeparator(char32_t c) { return c == ' ' || c == 0xA0 || c == 0x202F; }

bool NumericCore(std::u32string_view t) {
  bool digit = false;
  for (char32_t c : t) {
    if (text::IsDigit(c)) {
      digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit;
}

// Three digits, optionally followed by punctuation.
bool ThreeDigitGroup(std::u32string_view t) {
  if (t.size() < 3) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!text::IsDigit(t[i])) return false;
  }
  for (std::size_t i = 3; i < t.size(); ++i) {
    if (!text::IsPunct(t[i])) return false;
  }
  return true;
}

std::vector<Token> Tokenize(const std::u32string& cps) {
  std::vector<Token> raw;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && text::IsSpace(cps[i])) ++i;
    if (i >= cps.size()) break;
    const std::size_t start = i;
    while (i < cps.size() && !text::IsSpace(cps[i])) ++i;
    raw.push_back({start, i});
  }
  std::vector<Token> merged;
  const std::u32string_view view(cps);
  for (const Token& t : raw) {
    if (!merged.empty()) {
      Token& prev = merged.back();
      const bool single_gap = t.start == prev.end + 1 && IsGroupSeparator(cps[prev.end]);
      if (single_gap && NumericCore(view.substr(prev.start, prev.end - prev.start)) &&
          ThreeDigitGroup(view.substr(t.start, t.end - t.start))) {
        prev.end = t.end;
        continue;
      }
    }
    merged.push_back(t);
  }
  return merged;
}

}  // namespace

std::vector<SpanEdit> DiffSpans(std::string_view original, std::string_view corrected) {
  const std::u32string a = text::Decode(original);
  const std::u32string b = text::Decode(corrected);
  if (a == b) return {};
  const auto ta = Tokenize(a);
  const auto tb = Tokenize(b);
  const std::u32string_view va(a), vb(b);
  auto tok_a = [&](std::size_t i) { return va.substr(ta[i].start, ta[i].end - ta[i].start); };
  auto tok_b = [&](std::size_t j) { return vb.substr(tb[j].start, tb[j].end - tb[j].start); };

  // lcs[i][j] = LCS length of ta[i..] and tb[j..].
  const std::size_t n = ta.size(), m = tb.size();
  std::vector<std::uint32_t> lcs((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& { return lcs[i * (m + 1) + j]; };
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      at(i, j) = tok_a(i) == tok_b(j) ? at(i + 1, j + 1) + 1 : std::max(at(i + 1, j), at(i, j + 1));
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> matches;
  for (std::size_t i = 0, j = 0; i < n && j < m;) {
    if (tok_a(i) == tok_b(j)) {
      matches.emplace_back(i, j);
      ++i;
      ++j;
    } else if (at(i + 1, j) >= at(i, j + 1)) {
      ++i;
    } else {
      ++j;
    }
  }

  // Regions lie between consecutive matched tokens, including the text
  // before the first and after the last match.
  std::vector<SpanEdit> edits;
  auto emit = [&](std::size_t a_begin, std::size_t a_end, std::size_t b_begin, std::size_t b_end) {
    std::u32string_view ra = va.substr(a_begin, a_end - a_begin);
    std::u32string_view rb = vb.substr(b_begin, b_end - b_begin);
    if (ra == rb) return;
    while (!ra.empty() && !rb.empty() && ra.front() == rb.front() && text::IsSpace(ra.front())) {
      ra.remove_prefix(1);
      rb.remove_prefix(1);
      ++a_begin;
    }
    while (!ra.empty() && !rb.empty() && ra.back() == rb.back() && text::IsSpace(ra.back())) {
      ra.remove_suffix(1);
      rb.remove_suffix(1);
    }
    edits.push_back({a_begin, a_begin + ra.size(), text::Encode(rb)});
  };

  std::size_t a_cursor = 0, b_cursor = 0;
  for (const auto& [i, j] : matches) {
    emit(a_cursor, ta[i].start, b_cursor, tb[j].start);
    a_cursor = ta[i].end;
    b_cursor = tb[j].end;
  }
  emit(a_cursor, a.size(), b_cursor, b.size());
  return edits;
}

std::string ApplyEdits(std::string_view original, std::span<const SpanEdit> edits) {
  std::u32string cps = text::Decode(original);
  std::size_t limit = cps.size();
  for (auto it = edits.rbegin(); it != edits.rend(); ++it) {
    if (it->start > it->end || it->end > limit) {
      throw Error(ErrorCode::kInvalidInput, "span edit out of range or overlapping");
    }
    cps.replace(it->start, it->end - it->start, text::Decode(it->replacement));
    limit = it->start;
  }
  return text::Encode(cps);
}

}  // namespace factcheck::veracity

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace factcheck::veracity {

// Offsets count code points into the original text.
struct SpanEdit {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::string replacement;

  bool operator==(const SpanEdit&) const = default;
};

// Token-level LCS diff. Tokens are whitespace-delimited, except that digit
// groups separated by a single space ("250 000") form one token. Each
// changed run between matched tokens becomes one edit; whitespace shared by
// both sides at the edges of a run is left out of the edit. Applying the
// result to original reproduces corrected exactly.
std::vector<SpanEdit> DiffSpans(std::string_view original, std::string_view corrected);

// Applies sorted, non-overlapping edits right-to-left. Throws InvalidInput
// when an edit is out of range or edits overlap.
std::string ApplyEdits(std::string_view original, std::span<const SpanEdit> edits);

}  // namespace factcheck::veracity

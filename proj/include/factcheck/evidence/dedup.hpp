#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/evidence/types.hpp"

namespace factcheck::evidence {

constexpr double kNearDuplicateJaccard = 0.85;
constexpr std::size_t kShingleContentChars = 500;

// Sorted, unique character-3-gram shingles (three code points packed into
// one integer, so the set is exact). Strings shorter than three code points
// yield a single shingle of the whole string.
std::vector<std::uint64_t> Shingles(std::string_view text);

// |A ∩ B| / |A ∪ B| of two sorted unique sets; 1.0 when both are empty.
double Jaccard(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

// Title, a space, then the first 500 code points of the content.
std::string ShingleText(const EvidenceDoc& doc);

bool AreDuplicates(const EvidenceDoc& a, const EvidenceDoc& b);

// Lower value survives a collision: FactCheck, Encyclopedia, WebSearch, Scholarly.
int SourcePriority(SourceKind kind);

// Removes duplicates (equal normalized URL or shingle Jaccard >= 0.85).
// Docs are admitted greedily by (source priority, longer content, earlier
// position); a doc is dropped when it duplicates an admitted one. Survivors
// keep their input order. Idempotent.
std::vector<EvidenceDoc> Deduplicate(std::span<const EvidenceDoc> docs);

}  // namespace factcheck::evidence

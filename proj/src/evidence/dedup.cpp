#include "factcheck/evidence/dedup.hpp"

#include <algorithm>
#include <numeric>

#include "factcheck/evidence/url.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::evidence {
namespace {

struct Prepared {
  std::string url;
  std::vector<std::uint64_t> shingles;
};

Prepared Prepare(const EvidenceDoc& doc) { return {NormalizeUrl(doc.url), Shingles(ShingleText(doc))}; }

bool Collide(const Prepared& a, const Prepared& b) {
  return a.url == b.url || Jaccard(a.shingles, b.shingles) >= kNearDuplicateJaccard;
}

}  // namespace

std::vector<std::uint64_t> Shingles(std::string_view input) {
  const std::u32string cps = text::Decode(input);
  std::vector<std::uint64_t> out;
  if (cps.empty()) return out;
  auto pack = [](char32_t a, char32_t b, char32_t c) {
    return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) |
           static_cast<std::uint64_t>(c);
  };
  if (cps.size() < 3) {
    // Distinct from every full trigram: the high bit marks a short string.
    out.push_back((1ULL << 63) | pack(0, cps[0], cps.size() > 1 ? cps[1] : 0));
    return out;
  }
  out.reserve(cps.size() - 2);
  for (std::size_t i = 0; i + 3 <= cps.size(); ++i) out.push_back(pack(cps[i], cps[i + 1], cps[i + 2]));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double Jaccard(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t i = 0, j = 0, shared = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++shared;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return static_cast<double>(shared) / static_cast<double>(a.size() + b.size() - shared);
}

std::string ShingleText(const EvidenceDoc& doc) {
  const std::u32string content = text::Decode(doc.content);
  return doc.title + " " +
         text::Encode(std::u32string_view(content).substr(0, kShingleContentChars));
}

bool AreDuplicates(const EvidenceDoc& a, const EvidenceDoc& b) { return Collide(Prepare(a), Prepare(b)); }

int SourcePriority(SourceKind kind) {
  switch (kind) {
    case SourceKind::kFactCheck: return 0;
    case SourceKind::kEncyclopedia: return 1;
    case SourceKind::kWebSearch: return 2;
    case SourceKind::kScholarly: return 3;
  }
  return 4;
}

std::vector<EvidenceDoc> Deduplicate(std::span<const EvidenceDoc> docs) {
  std::vector<Prepared> prepared;
  prepared.reserve(docs.size());
  std::vector<std::size_t> content_len;
  for (const auto& d : docs) {
    prepared.push_back(Prepare(d));
    content_len.push_back(text::Length(d.content));
  }

  std::vector<std::size_t> order(docs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int pa = SourcePriority(docs[a].source_kind), pb = SourcePriority(docs[b].source_kind);
    if (pa != pb) return pa < pb;
    if (content_len[a] != content_len[b]) return content_len[a] > content_len[b];
    return a < b;
  });

  std::vector<std::size_t> admitted;
  std::vector<bool> keep(docs.size(), false);
  for (std::size_t idx : order) {
    const bool dup = std::any_of(admitted.begin(), admitted.end(),
                                 [&](std::size_t k) { return Collide(prepared[idx], prepared[k]); });
    if (dup) continue;
    admitted.push_back(idx);
    keep[idx] = true;
  }

  std::vector<EvidenceDoc> out;
  out.reserve(admitted.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (keep[i]) out.push_back(docs[i]);
  }
  return out;
}

}  // namespace factcheck::evidence

#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/evidence/types.hpp"

namespace factcheck::evidence {

// Domains excluded as evidence sources. An entry matches the domain itself
// and every subdomain of it.
class Blocklist {
 public:
  Blocklist() = default;
  explicit Blocklist(std::set<std::string> domains);

  // One domain per line, `#` comments and blank lines ignored.
  static Blocklist LoadFile(const std::filesystem::path& path);

  void Add(std::string_view domain);
  bool Blocks(std::string_view host_or_domain) const;
  bool Blocks(const EvidenceDoc& doc) const;
  std::size_t size() const { return domains_.size(); }

 private:
  std::set<std::string, std::less<>> domains_;
};

constexpr std::int64_t kDefaultMinCitations = 10;

// Drops blocklisted docs and scholarly docs with fewer than min_citations.
// Keeps the input order.
std::vector<EvidenceDoc> FilterCredible(std::span<const EvidenceDoc> docs, const Blocklist& blocklist,
                                        std::int64_t min_citations = kDefaultMinCitations);

}  // namespace factcheck::evidence

#include "factcheck/evidence/credibility.hpp"

#include <fstream>

#include "factcheck/errors.hpp"
#include "factcheck/evidence/url.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::evidence {

Blocklist::Blocklist(std::set<std::string> domains) {
  for (const auto& d : domains) Add(d);
}

Blocklist Blocklist::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read blocklist " + path.string());
  Blocklist list;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string_view domain = text::Trim(line);
    if (!domain.empty()) list.Add(domain);
  }
  return list;
}

void Blocklist::Add(std::string_view domain) {
  std::string d = text::ToLower(text::Trim(domain));
  while (!d.empty() && d.back() == '.') d.pop_back();
  if (!d.empty()) domains_.insert(std::move(d));
}

bool Blocklist::Blocks(std::string_view host) const {
  std::string_view h = host;
  while (!h.empty()) {
    if (domains_.count(h)) return true;
    const auto dot = h.find('.');
    if (dot == std::string_view::npos) break;
    h = h.substr(dot + 1);
  }
  return false;
}

bool Blocklist::Blocks(const EvidenceDoc& doc) const {
  return Blocks(doc.domain) || Blocks(HostOf(doc.url));
}

std::vector<EvidenceDoc> FilterCredible(std::span<const EvidenceDoc> docs, const Blocklist& blocklist,
                                        std::int64_t min_citations) {
  std::vector<EvidenceDoc> out;
  for (const auto& doc : docs) {
    if (blocklist.Blocks(doc)) continue;
    if (doc.source_kind == SourceKind::kScholarly && doc.citation_count.value_or(0) < min_citations) {
      continue;
    }
    out.push_back(doc);
  }
  return out;
}

}  // namespace factcheck::evidence

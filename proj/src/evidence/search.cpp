#include "factcheck/evidence/search.hpp"

#include <json.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <sstream>

#include "factcheck/errors.hpp"
#include "factcheck/evidence/url.hpp"
#include "factcheck/hash.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::evidence {
namespace {

using nlohmann::json;

std::chrono::system_clock::time_point Now(const Clock& clock) {
  return clock ? clock() : std::chrono::system_clock::now();
}

std::string UrlEncode(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

std::shared_ptr<RateLimiter> LimiterForHost(const std::string& host) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<RateLimiter>> limiters;
  std::lock_guard lock(mu);
  auto& slot = limiters[host];
  if (!slot) slot = std::make_shared<RateLimiter>(HttpSearchAdapter::kDefaultRequestsPerSecond);
  return slot;
}

}  // namespace

std::string NormalizeQuery(std::string_view query) { return text::CollapseWhitespace(query); }

std::string ReplayFixtureKey(std::string_view query, std::string_view language) {
  return Sha256Hex(NormalizeQuery(query) + "|" + std::string(language));
}

std::vector<EvidenceDoc> ParseSearchResponse(std::string_view body, std::string_view language,
                                             std::chrono::system_clock::time_point retrieved_at) {
  json parsed;
  try {
    parsed = json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kBackendError, std::string("malformed search response: ") + e.what());
  }
  std::vector<EvidenceDoc> docs;
  if (!parsed.contains("results")) return docs;
  for (const auto& r : parsed.at("results")) {
    try {
      std::optional<std::int64_t> citations;
      if (r.contains("citation_count") && !r.at("citation_count").is_null()) {
        citations = r.at("citation_count").get<std::int64_t>();
      }
      const std::string doc_lang = r.value("language", std::string(language));
      docs.push_back(MakeEvidenceDoc(r.at("url").get<std::string>(), r.value("title", ""),
                                     r.value("content", ""),
                                     ParseSourceKind(r.value("source_kind", "WebSearch")), doc_lang,
                                     citations, retrieved_at));
    } catch (const std::exception& e) {
      spdlog::warn("skipping search result: {}", e.what());
    }
  }
  return docs;
}

ReplaySearchAdapter::ReplaySearchAdapter(std::string name, std::filesystem::path root, Clock clock)
    : name_(std::move(name)), dir_(std::move(root) / name_), clock_(std::move(clock)) {}

std::filesystem::path ReplaySearchAdapter::FixturePath(std::string_view query,
                                                       std::string_view language) const {
  return dir_ / (ReplayFixtureKey(query, language) + ".json");
}

std::vector<EvidenceDoc> ReplaySearchAdapter::Search(const SearchQuery& query,
                                                     std::string_view language) const {
  std::ifstream in(FixturePath(query.text, language), std::ios::binary);
  if (!in) return {};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ParseSearchResponse(ss.str(), language, Now(clock_));
}

HttpSearchAdapter::HttpSearchAdapter(std::string name, std::string endpoint, std::string api_key,
                                     std::shared_ptr<const model::Transport> transport, Clock clock,
                                     std::chrono::milliseconds timeout)
    : name_(std::move(name)),
      endpoint_(std::move(endpoint)),
      api_key_(std::move(api_key)),
      transport_(std::move(transport)),
      clock_(std::move(clock)),
      timeout_(timeout),
      limiter_(LimiterForHost(HostOf(endpoint_))) {}

std::unique_ptr<HttpSearchAdapter> HttpSearchAdapter::FromEnvironment(
    std::string name, std::shared_ptr<const model::Transport> transport) {
  std::string upper = name;
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) {
    return std::isalnum(c) ? static_cast<char>(std::toupper(c)) : '_';
  });
  const char* endpoint = std::getenv(("SEARCH_" + upper + "_ENDPOINT").c_str());
  if (!endpoint || !*endpoint) return nullptr;
  const char* key = std::getenv(("SEARCH_" + upper + "_API_KEY").c_str());
  return std::make_unique<HttpSearchAdapter>(std::move(name), endpoint, key ? key : "",
                                             std::move(transport));
}

std::vector<EvidenceDoc> HttpSearchAdapter::Search(const SearchQuery& query,
                                                   std::string_view language) const {
  model::HttpRequest request;
  request.method = model::HttpRequest::Method::kGet;
  const char sep = endpoint_.find('?') == std::string::npos ? '?' : '&';
  request.url = endpoint_ + sep + "q=" + UrlEncode(NormalizeQuery(query.text)) +
                "&lang=" + UrlEncode(language);
  if (!api_key_.empty()) request.headers.emplace_back("Authorization", "Bearer " + api_key_);
  request.timeout = timeout_;
  limiter_->Wait();
  return ParseSearchResponse(transport_->Send(request), language, Now(clock_));
}

void AdapterSet::Add(std::shared_ptr<const SearchAdapter> adapter) {
  entries_.push_back({std::move(adapter), std::make_shared<Semaphore>(in_flight_)});
}

SearchResult SearchAllSources(const SearchQuery& query, std::string_view language,
                              const AdapterSet& adapters) {
  if (adapters.empty()) throw Error(ErrorCode::kAllAdaptersFailed, "no search adapters configured");

  std::vector<std::future<std::vector<EvidenceDoc>>> pending;
  pending.reserve(adapters.size());
  for (const auto& entry : adapters.entries()) {
    pending.push_back(std::async(std::launch::async, [&entry, &query, language] {
      SemaphoreGuard guard(*entry.in_flight);
      return entry.adapter->Search(query, language);
    }));
  }

  SearchResult result;
  std::size_t failures = 0;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& name = adapters.entries()[i].adapter->name();
    try {
      auto docs = pending[i].get();
      std::move(docs.begin(), docs.end(), std::back_inserter(result.docs));
    } catch (const std::exception& e) {
      ++failures;
      spdlog::warn("search adapter {} failed: {}", name, e.what());
      result.warnings.push_back("adapter " + name + " failed: " + e.what());
    }
  }
  if (failures == adapters.size()) {
    throw Error(ErrorCode::kAllAdaptersFailed, "every search adapter failed for: " + query.text);
  }
  return result;
}

}  // namespace factcheck::evidence

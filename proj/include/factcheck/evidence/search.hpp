#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/concurrency.hpp"
#include "factcheck/evidence/types.hpp"
#include "factcheck/model/transport.hpp"

namespace factcheck::evidence {

using Clock = std::function<std::chrono::system_clock::time_point()>;

class SearchAdapter {
 public:
  virtual ~SearchAdapter() = default;
  virtual const std::string& name() const = 0;
  // Throws on transport failure; an empty result means "no hits".
  virtual std::vector<EvidenceDoc> Search(const SearchQuery& query,
                                          std::string_view language) const = 0;
};

// Query text trimmed with internal whitespace collapsed.
std::string NormalizeQuery(std::string_view query);

// sha256("<normalized query>|<language>"), the replay file stem.
std::string ReplayFixtureKey(std::string_view query, std::string_view language);

// Parses `{query, language, results:[{url,title,content,source_kind,
// citation_count?}]}`. Results with an invalid URL or empty content are skipped.
std::vector<EvidenceDoc> ParseSearchResponse(std::string_view body, std::string_view language,
                                             std::chrono::system_clock::time_point retrieved_at);

// Serves recorded responses from `<root>/<name>/<ReplayFixtureKey>.json`.
// A missing file is an empty result.
class ReplaySearchAdapter final : public SearchAdapter {
 public:
  ReplaySearchAdapter(std::string name, std::filesystem::path root, Clock clock = {});

  const std::string& name() const override { return name_; }
  std::vector<EvidenceDoc> Search(const SearchQuery& query, std::string_view language) const override;

  std::filesystem::path FixturePath(std::string_view query, std::string_view language) const;

 private:
  std::string name_;
  std::filesystem::path dir_;
  Clock clock_;
};

// GET <endpoint>?q=<query>&lang=<language> with a bearer API key; the
// response body uses the replay schema. Requests to one host are spaced by a
// shared per-host rate limiter.
class HttpSearchAdapter final : public SearchAdapter {
 public:
  static constexpr double kDefaultRequestsPerSecond = 4.0;

  HttpSearchAdapter(std::string name, std::string endpoint, std::string api_key,
                    std::shared_ptr<const model::Transport> transport, Clock clock = {},
                    std::chrono::milliseconds timeout = std::chrono::seconds(30));

  // Reads SEARCH_<NAME>_ENDPOINT / SEARCH_<NAME>_API_KEY; nullptr when the
  // endpoint variable is unset.
  static std::unique_ptr<HttpSearchAdapter> FromEnvironment(
      std::string name, std::shared_ptr<const model::Transport> transport);

  const std::string& name() const override { return name_; }
  std::vector<EvidenceDoc> Search(const SearchQuery& query, std::string_view language) const override;

 private:
  std::string name_;
  std::string endpoint_;
  std::string api_key_;
  std::shared_ptr<const model::Transport> transport_;
  Clock clock_;
  std::chrono::milliseconds timeout_;
  std::shared_ptr<RateLimiter> limiter_;
};

// Adapters plus a per-adapter in-flight cap.
class AdapterSet {
 public:
  static constexpr std::size_t kDefaultInFlight = 2;

  explicit AdapterSet(std::size_t in_flight_per_adapter = kDefaultInFlight)
      : in_flight_(in_flight_per_adapter) {}

  void Add(std::shared_ptr<const SearchAdapter> adapter);
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  struct Entry {
    std::shared_ptr<const SearchAdapter> adapter;
    std::shared_ptr<Semaphore> in_flight;
  };
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::size_t in_flight_;
  std::vector<Entry> entries_;
};

struct SearchResult {
  std::vector<EvidenceDoc> docs;
  std::vector<std::string> warnings;
};

// Queries every adapter concurrently and concatenates results in adapter
// order. Failing adapters are logged and skipped. Throws AllAdaptersFailed
// when no adapter is configured or every adapter failed.
SearchResult SearchAllSources(const SearchQuery& query, std::string_view language,
                              const AdapterSet& adapters);

}  // namespace factcheck::evidence

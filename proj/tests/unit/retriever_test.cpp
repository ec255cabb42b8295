#include <doctest.h>

#include "factcheck/evidence/retriever.hpp"
#include "factcheck/evidence/url.hpp"
#include "factcheck/model/mock_backends.hpp"
#include "support/oracles.hpp"

using namespace factcheck;
using namespace factcheck::evidence;

namespace {

AdapterSet ReplayAdapters() {
  AdapterSet set;
  for (const char* name : {"factcheck", "encyclopedia", "websearch", "scholarly"}) {
    set.Add(std::make_shared<ReplaySearchAdapter>(name, oracle::FixtureDir() / "search"));
  }
  return set;
}

EvidenceRetriever MakeRetriever(Blocklist blocklist) {
  return EvidenceRetriever(QueryGenerator(std::make_shared<model::MockGenerator>()), ReplayAdapters(),
                           std::move(blocklist), std::make_shared<model::MockEmbedder>());
}

claims::Claim MakeClaim(std::string text, std::string lang) {
  claims::Claim c;
  c.id = "c0";
  c.sentence.text = text;
  c.enriched_text = std::move(text);
  c.language = std::move(lang);
  return c;
}

}  // namespace

TEST_CASE("eiffel completion claim") {
  const auto blocklist = Blocklist::LoadFile(oracle::DataDir() / "blocklist.txt");
  const auto r = MakeRetriever(blocklist).Retrieve(
      MakeClaim("The Eiffel Tower was completed in 1889 for the World's Fair in Paris.", "en"));
  CHECK(r.snippets.size() == 6);
  std::set<std::string> domains;
  for (std::size_t i = 0; i < r.snippets.size(); ++i) {
    domains.insert(r.snippets[i].doc->domain);
    if (i > 0) CHECK(r.snippets[i - 1].similarity >= r.snippets[i].similarity);
  }
  CHECK(domains == std::set<std::string>{"wikipedia.org", "parisinfo.com", "example.org"});
  CHECK(r.snippets[0].similarity == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("claim without fixtures retrieves nothing") {
  const auto r = MakeRetriever({}).Retrieve(MakeClaim("Bananas are the official fruit of Antarctica.", "en"));
  CHECK(r.snippets.empty());
}

TEST_CASE("blocking every fixture domain removes all evidence") {
  Blocklist all;
  for (const auto& doc : oracle::SourceDocs()) all.Add(doc.domain);
  for (const auto& entry : oracle::ReadJson(oracle::FixtureDir() / "sources" / "search.json")) {
    const auto r = MakeRetriever(all).Retrieve(MakeClaim(entry["query"], entry["language"]));
    CHECK(r.snippets.empty());
  }
}

TEST_CASE("global snippet cap") {
  RetrievalConfig cfg;
  cfg.max_snippets = 2;
  EvidenceRetriever retriever(QueryGenerator(std::make_shared<model::MockGenerator>()), ReplayAdapters(), {},
                              std::make_shared<model::MockEmbedder>(), cfg);
  const auto r = retriever.Retrieve(MakeClaim("The Eiffel Tower was completed in 1889 for the World's Fair in Paris.", "en"));
  CHECK(r.snippets.size() == 2);
}

TEST_CASE("no adapters is reported as a warning") {
  EvidenceRetriever retriever(QueryGenerator(std::make_shared<model::MockGenerator>()), AdapterSet{}, {},
                              std::make_shared<model::MockEmbedder>());
  const auto r = retriever.Retrieve(MakeClaim("The tower is 330 metres tall including its antennas.", "en"));
  CHECK(r.snippets.empty());
  CHECK_FALSE(r.warnings.empty());
}

#include <doctest.h>

#include <random>

#include "factcheck/errors.hpp"
#include "factcheck/hash.hpp"
#include "factcheck/evidence/credibility.hpp"
#include "factcheck/evidence/dedup.hpp"
#include "factcheck/evidence/queries.hpp"
#include "factcheck/evidence/search.hpp"
#include "factcheck/evidence/snippets.hpp"
#include "factcheck/evidence/url.hpp"
#include "factcheck/model/mock_backends.hpp"
#include "support/oracles.hpp"

using namespace factcheck;
using namespace factcheck::evidence;

namespace {

EvidenceDoc Doc(std::string url, std::string content, SourceKind kind = SourceKind::kWebSearch,
                std::string title = "T", std::optional<std::int64_t> cites = std::nullopt) {
  return MakeEvidenceDoc(std::move(url), std::move(title), std::move(content), kind, "en", cites);
}

class StaticAdapter final : public SearchAdapter {
 public:
  StaticAdapter(std::string name, std::vector<EvidenceDoc> docs) : name_(std::move(name)), docs_(std::move(docs)) {}
  const std::string& name() const override { return name_; }
  std::vector<EvidenceDoc> Search(const SearchQuery&, std::string_view) const override { return docs_; }

 private:
  std::string name_;
  std::vector<EvidenceDoc> docs_;
};

class TimeoutAdapter final : public SearchAdapter {
 public:
  const std::string& name() const override { return name_; }
  std::vector<EvidenceDoc> Search(const SearchQuery&, std::string_view) const override {
    throw model::TransportError("timed out", true);
  }

 private:
  std::string name_ = "slow";
};

class ScriptedGenerator final : public model::Generator {
 public:
  explicit ScriptedGenerator(std::string reply) : reply_(std::move(reply)) {}
  std::string Generate(std::string_view, int) const override { return reply_; }

 private:
  std::string reply_;
};

claims::Claim MakeClaim(std::string text, std::string lang = "en") {
  claims::Claim c;
  c.id = "c0";
  c.sentence.text = text;
  c.enriched_text = std::move(text);
  c.language = std::move(lang);
  return c;
}

}  // namespace

TEST_CASE("url normalization") {
  CHECK(NormalizeUrl("HTTPS://En.Wikipedia.ORG/wiki/Eiffel_Tower#History") == "https://en.wikipedia.org/wiki/Eiffel_Tower");
  CHECK(NormalizeUrl("https://x.org/p?utm_source=a&id=3&fbclid=z&gclid=q") == "https://x.org/p?id=3");
  CHECK(HostOf("https://user@Sub.Example.com:8443/x") == "sub.example.com");
  CHECK(HostOf("/relative") == "");
  CHECK(RegistrableDomain("news.bbc.co.uk") == "bbc.co.uk");
  CHECK(RegistrableDomain("en.m.wikipedia.org") == "wikipedia.org");
  CHECK(RegistrableDomain("localhost") == "localhost");
}

TEST_CASE("evidence docs validate their fields") {
  CHECK_THROWS_AS(Doc("/relative", "x"), Error);
  CHECK_THROWS_AS(Doc("https://x.org", ""), Error);
  CHECK(Doc("https://a.b.example.com/x", "c").domain == "example.com");
  CHECK(Doc("https://x.org", "c", SourceKind::kScholarly).citation_count == 0);
  CHECK_FALSE(Doc("https://x.org", "c", SourceKind::kWebSearch, "T", 5).citation_count.has_value());
}

TEST_CASE("query generation") {
  QueryGenerator gen(std::make_shared<model::MockGenerator>());
  const auto q = gen.Generate(MakeClaim("Norway has 10 million people"));
  REQUIRE(q.size() == 2);
  CHECK(q[0].kind == QueryKind::kVerbatimClaim);
  CHECK(q[0].text == "Norway has 10 million people");
  CHECK(q[1].kind == QueryKind::kKeyword);
  CHECK(q[1].text == "Norway 10 million people");
  CHECK(q[0].claim_id == "c0");
  CHECK_THROWS_AS(gen.Generate(MakeClaim("  ")), Error);
}

TEST_CASE("questions come from completion lines ending in a question mark") {
  QueryGenerator gen(std::make_shared<ScriptedGenerator>("How many people live in Norway?\nnot a question\n  What is Norway's population? "));
  const auto q = gen.Generate(MakeClaim("Norway has 10 million people"));
  REQUIRE(q.size() == 4);
  CHECK(q[2].kind == QueryKind::kQuestion);
  CHECK(q[2].text == "How many people live in Norway?");
  CHECK(q[3].text == "What is Norway's population?");
  for (const auto& x : q) CHECK(text::Length(x.text) <= SearchQuery::kMaxChars);
}

TEST_CASE("keyword query keeps content words") {
  CHECK(KeywordQuery("The tower is 330 metres tall.", "en") == "tower 330 metres tall");
  CHECK(KeywordQuery("the of and", "en") == "the of and");
  CHECK(IsStopword("no", "og"));
}

TEST_CASE("search across adapters") {
  SearchQuery q{"c0", "anything", QueryKind::kVerbatimClaim};
  SUBCASE("no adapters") {
    try {
      SearchAllSources(q, "en", AdapterSet{});
      FAIL("expected AllAdaptersFailed");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kAllAdaptersFailed);
    }
  }
  SUBCASE("one adapter times out") {
    AdapterSet set;
    set.Add(std::make_shared<TimeoutAdapter>());
    set.Add(std::make_shared<StaticAdapter>("ok", std::vector<EvidenceDoc>{Doc("https://a.org", "1"), Doc("https://b.org", "2"), Doc("https://c.org", "3")}));
    const auto r = SearchAllSources(q, "en", set);
    CHECK(r.docs.size() == 3);
    CHECK(r.warnings.size() == 1);
  }
  SUBCASE("all adapters fail") {
    AdapterSet set;
    set.Add(std::make_shared<TimeoutAdapter>());
    CHECK_THROWS_AS(SearchAllSources(q, "en", set), Error);
  }
}

TEST_CASE("replay adapter reads fixture files by key") {
  const std::string query = "The Eiffel Tower was completed in 1889 for the World's Fair in Paris.";
  CHECK(NormalizeQuery("  a \n b  ") == "a b");
  CHECK(ReplayFixtureKey(query, "en") == Sha256Hex(query + "|en"));
  ReplaySearchAdapter websearch("websearch", oracle::FixtureDir() / "search");
  const auto docs = websearch.Search({"c0", "  " + query + " ", QueryKind::kVerbatimClaim}, "en");
  CHECK(docs.size() == 3);
  CHECK(websearch.Search({"c0", "no such query", QueryKind::kVerbatimClaim}, "en").empty());
}

TEST_CASE("replay set A returns exactly the documents in its manifest") {
  const auto manifest = oracle::ReadJson(oracle::FixtureDir() / "search" / "set_a.manifest.json");
  AdapterSet set;
  for (const auto& name : manifest["adapters"]) {
    set.Add(std::make_shared<ReplaySearchAdapter>(name.get<std::string>(), oracle::FixtureDir() / "search"));
  }
  const auto r = SearchAllSources({"c0", manifest["query"], QueryKind::kVerbatimClaim}, manifest["language"].get<std::string>(), set);
  std::vector<std::string> urls;
  for (const auto& d : r.docs) urls.push_back(d.url);
  CHECK(urls == manifest["urls"].get<std::vector<std::string>>());
  CHECK(urls.size() == 7);
  CHECK(r.warnings.empty());
}

TEST_CASE("search responses skip invalid results") {
  const std::string body = R"({"query":"q","language":"en","results":[
    {"url":"https://ok.org/a","title":"A","content":"fine","source_kind":"WebSearch"},
    {"url":"relative/path","title":"B","content":"bad url","source_kind":"WebSearch"},
    {"url":"https://ok.org/c","title":"C","content":"","source_kind":"WebSearch"},
    {"url":"https://doi.org/x","title":"D","content":"paper","source_kind":"Scholarly","citation_count":12}]})";
  const auto docs = ParseSearchResponse(body, "en", {});
  REQUIRE(docs.size() == 2);
  CHECK(docs[1].citation_count == 12);
}

TEST_CASE("credibility fixture") {
  const auto fixture = oracle::ReadJson(oracle::FixtureDir() / "credibility" / "docs.json");
  const auto blocklist = Blocklist::LoadFile(oracle::FixtureDir() / "credibility" / "blocklist.txt");
  CHECK(blocklist.size() == 3);
  std::vector<EvidenceDoc> docs;
  std::vector<std::string> expected;
  for (const auto& d : fixture["docs"]) {
    std::optional<std::int64_t> cites;
    if (d.contains("citation_count")) cites = d["citation_count"].get<std::int64_t>();
    docs.push_back(Doc(d["url"], d["content"], ParseSourceKind(d["source_kind"].get<std::string>()), d["title"], cites));
    if (d["kept"].get<bool>()) expected.push_back(d["url"]);
  }
  REQUIRE(docs.size() == 12);
  const auto kept = FilterCredible(docs, blocklist, fixture["min_citations"].get<std::int64_t>());
  std::vector<std::string> urls;
  for (const auto& d : kept) urls.push_back(d.url);
  CHECK(urls == expected);
  CHECK(blocklist.Blocks("deep.news.clickbait-daily.com"));
  CHECK_FALSE(blocklist.Blocks("notclickbait-daily.com"));
}

TEST_CASE("shingles and jaccard agree with the set oracle") {
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"abcdef", "abcxef"}, {"", ""}, {"ab", "ab"}, {"Øresund bridge", "Øresund bridges"}, {"x", "yz"}}) {
    const auto sa = Shingles(a);
    const auto sb = Shingles(b);
    CHECK(sa.size() == oracle::ShingleSet(a).size());
    CHECK(Jaccard(sa, sb) == doctest::Approx(oracle::BruteJaccard(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("dedup prefers the higher-priority source and keeps order") {
  const std::string body = "The Eiffel Tower was completed in 1889 for the World's Fair in Paris.";
  const std::vector<EvidenceDoc> docs{
      Doc("https://blog.example/a", body, SourceKind::kWebSearch, "Eiffel"),
      Doc("https://other.example/b", "Something entirely different about bridges.", SourceKind::kWebSearch, "Bridges"),
      Doc("https://en.wikipedia.org/wiki/Eiffel_Tower", body, SourceKind::kEncyclopedia, "Eiffel"),
      Doc("https://en.wikipedia.org/wiki/Eiffel_Tower#x", "Short.", SourceKind::kScholarly, "Other"),
  };
  const auto out = Deduplicate(docs);
  REQUIRE(out.size() == 2);
  CHECK(out[0].url == docs[1].url);
  CHECK(out[1].url == docs[2].url);
  CHECK(Deduplicate(out) == out);
  CHECK(SourcePriority(SourceKind::kFactCheck) < SourcePriority(SourceKind::kScholarly));
}

TEST_CASE("dedup properties on random lists") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> bases{"alpha beta gamma delta epsilon zeta", "one two three four five six seven",
                                       "red orange yellow green blue indigo", "oslo bergen trondheim stavanger"};
  for (int round = 0; round < 60; ++round) {
    std::vector<EvidenceDoc> docs;
    const int n = std::uniform_int_distribution<int>(0, 12)(rng);
    for (int i = 0; i < n; ++i) {
      std::string content = bases[rng() % bases.size()];
      if (rng() % 2) content += " extra " + std::to_string(rng() % 3);
      const auto kind = static_cast<SourceKind>(rng() % 4);
      docs.push_back(Doc("https://site" + std::to_string(rng() % 5) + ".org/p", content, kind));
    }
    const auto out = Deduplicate(docs);
    CHECK(Deduplicate(out) == out);
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        CHECK(NormalizeUrl(out[i].url) != NormalizeUrl(out[j].url));
        CHECK(oracle::BruteJaccard(oracle::ShingleSource(out[i]), oracle::ShingleSource(out[j])) < kNearDuplicateJaccard);
      }
  }
}

TEST_CASE("paragraph splitting") {
  CHECK(SplitParagraphs("A.\n\nB.") == std::vector<std::string>{"A.", "B."});
  CHECK(SplitParagraphs("A.\n  \n\n B.") == std::vector<std::string>{"A.", "B."});
  CHECK(SplitParagraphs("One. Two.\nThree.") == std::vector<std::string>{"One. Two.\nThree."});
  const auto windows = SplitParagraphs("S1. S2. S3. S4. S5. S6. S7.");
  REQUIRE(windows.size() == 3);
  CHECK(windows[0] == "S1. S2. S3.");
  CHECK(windows[1] == "S4. S5. S6.");
  CHECK(windows[2] == "S7.");
  CHECK(SplitParagraphs("S1. S2. S3. S4. S5.").size() == 1);
}

TEST_CASE("snippet ranking") {
  model::MockEmbedder emb;
  const auto doc = std::make_shared<const EvidenceDoc>(
      Doc("https://x.org", "Unrelated words about cooking.\n\nThe tower is 330 metres tall.\n\nMore about trains.\n\nAnd the weather."));
  const auto ranked = RankSnippets("The tower is 330 metres tall.", doc, emb);
  REQUIRE(ranked.snippets.size() == 3);
  CHECK(ranked.snippets[0].paragraph_index == 1);
  CHECK(ranked.snippets[0].similarity == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ranked.snippets[0].rank == 1);
  CHECK(ranked.snippets[2].rank == 3);
  CHECK(RankSnippets("x y z", doc, emb, 1).snippets.size() == 1);
  CHECK_FALSE(ranked.warning.has_value());
}

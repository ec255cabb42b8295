#include <doctest.h>

#include <atomic>
#include <cmath>
#include <set>

#include "factcheck/claims/detector.hpp"
#include "factcheck/errors.hpp"
#include "factcheck/evidence/queries.hpp"
#include "factcheck/model/mock_backends.hpp"
#include "factcheck/model/prompt.hpp"
#include "factcheck/model/remote_backends.hpp"
#include "factcheck/model/transport.hpp"
#include "factcheck/veracity/predictor.hpp"
#include "support/oracles.hpp"

using namespace factcheck;
using namespace factcheck::model;

namespace {

// Fails the first `failures` sends, then answers with `reply`.
class FlakyTransport final : public Transport {
 public:
  FlakyTransport(int failures, bool retryable, std::string reply)
      : failures_(failures), retryable_(retryable), reply_(std::move(reply)) {}
  std::string Send(const HttpRequest&) const override {
    if (calls_++ < failures_) throw TransportError("simulated failure", retryable_);
    return reply_;
  }
  int calls() const { return calls_; }

 private:
  int failures_;
  bool retryable_;
  std::string reply_;
  mutable std::atomic<int> calls_{0};
};

BackendConfig Remote(BackendKind kind, std::string endpoint, std::string model = "") {
  BackendConfig c;
  c.kind = kind;
  c.endpoint = std::move(endpoint);
  c.model_name = std::move(model);
  return c;
}

std::shared_ptr<const Transport> Replay() {
  return std::make_shared<ReplayTransport>(oracle::FixtureDir() / "replay");
}

}  // namespace

TEST_CASE("mock embedder is deterministic and unit length") {
  MockEmbedder e;
  const std::vector<std::string> texts{"Oslo is the capital of Norway.", "x", "Oslo is the capital of Norway."};
  const auto v = e.EmbedTexts(texts);
  REQUIRE(v.size() == 3);
  CHECK(v[0].values == v[2].values);
  for (const auto& x : v) {
    CHECK(x.dimension() == MockEmbedder::kDimension);
    double sq = 0;
    for (double d : x.values) sq += d * d;
    CHECK(std::sqrt(sq) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("mock embedder separates 200 distinct paragraphs") {
  const std::vector<std::string> subjects{"The river", "A committee", "The museum", "Local farmers",
                                          "The national team", "A new bridge", "The old library",
                                          "Researchers", "The ferry", "City council"};
  const std::vector<std::string> verbs{"opened", "reported", "closed", "expanded", "studied"};
  const std::vector<std::string> tails{"in the spring of 1998.", "after a long debate.",
                                       "with support from the region.", "despite heavy rain."};
  std::set<std::vector<double>> seen;
  std::size_t made = 0;
  for (const auto& s : subjects)
    for (const auto& v : verbs)
      for (const auto& t : tails) {
        const auto vec = MockEmbedder::EmbedOne(s + " " + v + " " + t);
        CHECK(seen.insert(vec.values).second);
        ++made;
      }
  CHECK(made == 200);
}

TEST_CASE("embed all batches large inputs in order") {
  std::vector<std::string> texts;
  for (int i = 0; i < 150; ++i) texts.push_back("paragraph number " + std::to_string(i));
  const auto v = EmbedAll(MockEmbedder{}, texts);
  REQUIRE(v.size() == texts.size());
  CHECK(v[149].values == MockEmbedder::EmbedOne(texts[149]).values);
  std::vector<std::string> too_many(Embedder::kMaxBatch + 1, "t");
  CHECK_THROWS_AS(MockEmbedder{}.EmbedTexts(too_many), Error);
}

TEST_CASE("mock check-worthiness rule") {
  MockTextScorer s;
  CHECK(s.ScoreText(ScoreTask::kCheckworthy, "Norway has a population of 5.5 million.") == 1.0);
  CHECK(s.ScoreText(ScoreTask::kCheckworthy, "What a lovely day!") == 0.0);
  CHECK(s.ScoreText(ScoreTask::kCheckworthy, "we met Anna yesterday") == 1.0);
  CHECK(s.ScoreText(ScoreTask::kCheckworthy, "Nothing to see here") == 0.0);
}

TEST_CASE("mock stance rule") {
  MockPairScorer s;
  SUBCASE("negated evidence with enough overlap refutes") {
    const auto r = s.ScorePair(PairTask::kStance, "Oslo is not the capital of Sweden.", "Oslo is the capital of Sweden.");
    CHECK(r.label == StanceLabel::kRefutes);
    CHECK(r.confidence == 1.0);
  }
  SUBCASE("negation with low overlap still supports") {
    const auto r = s.ScorePair(PairTask::kStance, "Never mind the weather.", "Oslo is the capital of Norway.");
    CHECK(r.label == StanceLabel::kSupports);
    CHECK(r.confidence == 0.5);
  }
  SUBCASE("plain agreement") {
    const auto r = s.ScorePair(PairTask::kStance, "Oslo is the capital of Norway.", "Oslo is the capital of Norway.");
    CHECK(r.label == StanceLabel::kSupports);
    CHECK(r.confidence == 1.0);
  }
  CHECK(MockPairScorer::NegationLexicon().size() == 12);
  CHECK(MockPairScorer::TokenOverlap("a b c d", "a b x") == 0.5);
  CHECK_THROWS_AS(s.ScorePair(PairTask::kStance, " ", "x"), Error);
}

TEST_CASE("mock generator follows the task header") {
  MockGenerator g;
  CHECK(g.Generate(BuildPrompt("coref", {{"payload", "It has fjords."}}, "body"), 64) == "It has fjords.");
  CHECK(g.Generate(BuildPrompt("query_gen", {{"payload", "x"}}, "body"), 64).empty());
  CHECK(g.Generate(BuildPrompt("justify", {{"n", "3"}, {"label", "Disputed"}, {"domain", "example.org"}}, "b"), 64) ==
        "Based on 3 evidence snippets, the claim appears Disputed. Top source: example.org.");
  const std::string fix = g.Generate(
      BuildPrompt("fix",
                  {{"payload", "Norge har et landareal på 250 000 km2 og cirka 10 millioner innbyggere"},
                   {"evidence", "Landarealet er 385 000 km2 og det bor cirka 5.5 millioner innbyggere i Norge."}},
                  "b"),
      64);
  CHECK(fix == "Norge har et landareal på 385 000 km2 og cirka 5.5 millioner innbyggere");
  CHECK(LlmCheckworthyScorer::ParseAnswer(g.Generate(BuildPrompt("checkworthy", {{"payload", "It cost 5 dollars."}}, ""), 64)));
}

TEST_CASE("number correction leaves unmatched sentences alone") {
  const std::vector<std::string> ev{"Nothing numeric here."};
  CHECK(MockGenerator::CorrectNumbers("The bridge is 40 metres long.", ev) == "The bridge is 40 metres long.");
  const std::vector<std::string> same{"The bridge is 40 metres long."};
  CHECK(MockGenerator::CorrectNumbers("The bridge is 40 metres long.", same) == "The bridge is 40 metres long.");
}

TEST_CASE("prompt headers round-trip") {
  const std::string p = BuildPrompt("fix", {{"payload", "line one\nline two"}, {"evidence", "a"}, {"evidence", "b"}}, "Body text\nmore");
  const auto parsed = ParsePrompt(p);
  CHECK(parsed.task == "fix");
  REQUIRE(parsed.Get("payload"));
  CHECK(*parsed.Get("payload") == "line one line two");
  CHECK(parsed.GetAll("evidence") == std::vector<std::string>{"a", "b"});
  CHECK(parsed.body == "Body text\nmore");
  CHECK(parsed.Get("missing") == nullptr);
}

TEST_CASE("prompt library matches the shipped prompt files") {
  const PromptLibrary builtin;
  const PromptLibrary files(oracle::DataDir() / "prompts");
  for (const char* name : {"coref", "query_gen", "justify", "fix", "checkworthy"}) {
    CHECK(builtin.Template(name) == files.Template(name));
  }
  CHECK(builtin.Render("justify", {{"claim", "CLAIM-X"}}).find("CLAIM-X") != std::string::npos);
}

TEST_CASE("backend config validation") {
  BackendConfig mock;
  CHECK_NOTHROW(mock.Validate());
  mock.endpoint = "http://x";
  CHECK_THROWS_AS(mock.Validate(), Error);
  BackendConfig remote = Remote(BackendKind::kRemoteScorer, "");
  CHECK_THROWS_AS(remote.Validate(), Error);
  remote.endpoint = "http://x/score";
  remote.timeout = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(remote.Validate(), Error);
}

TEST_CASE("retries back off exponentially on retryable failures") {
  std::vector<std::chrono::milliseconds> sleeps;
  RetryPolicy policy;
  policy.sleep = [&](std::chrono::milliseconds d) { sleeps.push_back(d); };
  HttpRequest req;
  req.url = "http://x/y";

  FlakyTransport two(2, true, "ok");
  CHECK(SendWithRetries(two, req, policy) == "ok");
  CHECK(two.calls() == 3);
  CHECK(sleeps == std::vector<std::chrono::milliseconds>{std::chrono::milliseconds(250), std::chrono::milliseconds(500)});

  sleeps.clear();
  FlakyTransport three(3, true, "ok");
  CHECK_THROWS_AS(SendWithRetries(three, req, policy), TransportError);
  CHECK(three.calls() == 3);

  sleeps.clear();
  FlakyTransport fatal(1, false, "ok");
  CHECK_THROWS_AS(SendWithRetries(fatal, req, policy), TransportError);
  CHECK(fatal.calls() == 1);
  CHECK(sleeps.empty());
}

TEST_CASE("remote clients map transport failures to capability errors") {
  RetryPolicy policy;
  policy.max_retries = 0;
  policy.sleep = [](std::chrono::milliseconds) {};
  auto down = std::make_shared<FlakyTransport>(100, true, "");
  ChatGenerator gen(Remote(BackendKind::kChatGenerator, "http://g/v1/chat/completions"), down, policy);
  try {
    gen.Generate("#task: coref\n\nx", 16);
    FAIL("expected GeneratorUnavailable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kGeneratorUnavailable);
  }
  RemoteEmbedder emb(Remote(BackendKind::kRemoteEmbedder, "http://e/embed"), down, policy);
  const std::vector<std::string> one{"x"};
  try {
    emb.EmbedTexts(one);
    FAIL("expected EmbedderUnavailable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmbedderUnavailable);
  }
}

TEST_CASE("remote clients replay recorded responses") {
  RemoteTextScorer scorer(Remote(BackendKind::kRemoteScorer, "http://models.local/v1/checkworthy"), Replay());
  CHECK(scorer.ScoreText(ScoreTask::kCheckworthy, "Oslo is the capital of Norway.") == 0.91);

  RemotePairScorer nli(Remote(BackendKind::kRemoteScorer, "http://models.local/v1/checkworthy"), Replay());
  const auto pair = nli.ScorePair(PairTask::kStance, "Oslo is not the capital of Sweden.", "Oslo is the capital of Sweden.");
  CHECK(pair.label == StanceLabel::kRefutes);
  CHECK(pair.confidence == 0.83);

  RemoteEmbedder emb(Remote(BackendKind::kRemoteEmbedder, "http://models.local/v1/embed"), Replay());
  const std::vector<std::string> texts{"first text", "second text"};
  const auto v = emb.EmbedTexts(texts);
  REQUIRE(v.size() == 2);
  CHECK(v[0].values == std::vector<double>{0.6, 0.8, 0.0});
  CHECK(CosineSimilarity(v[0], v[1]) == 0.0);

  const std::vector<std::string> unrecorded{"never recorded"};
  CHECK_THROWS_AS(emb.EmbedTexts(unrecorded), Error);
}

TEST_CASE("recorded chat completions resolve a pronoun to its entity") {
  auto models = ModelGateway::Mock();
  models.generator = std::make_shared<ChatGenerator>(
      Remote(BackendKind::kChatGenerator, "http://models.local/v1/chat/completions", "fc-chat"), Replay());
  claims::ClaimDetector detector(std::make_shared<claims::RuleSegmenter>(), models);
  const auto sentences = detector.SegmentSentences("Oslo er hovedstaden i Norge. Byen ble grunnlagt rundt år 1040.", "no");
  const auto resolved = detector.ResolveCoreferences(sentences, "no");
  REQUIRE(resolved.size() == 2);
  CHECK(resolved[0] == sentences[0].text);
  CHECK(resolved[1].find("Oslo") != std::string::npos);
}

TEST_CASE("replay keys hash the body for POST and the URL for GET") {
  HttpRequest post;
  post.body = "abc";
  CHECK(ReplayTransport::ReplayKey(post) == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  HttpRequest get;
  get.method = HttpRequest::Method::kGet;
  get.url = "abc";
  get.body = "ignored";
  CHECK(ReplayTransport::ReplayKey(get) == ReplayTransport::ReplayKey(post));
  CHECK(SplitUrl("https://h:8080/p/q?x=1") == std::pair<std::string, std::string>{"https://h:8080", "/p/q?x=1"});
}

TEST_CASE("recorded completions drive query generation and justification") {
  const auto gen = std::make_shared<ChatGenerator>(
      Remote(BackendKind::kChatGenerator, "http://models.local/v1/chat/completions", "fc-chat"), Replay());
  claims::Claim claim;
  claim.id = "c0";
  claim.sentence.text = claim.enriched_text = "The Eiffel Tower was completed in 1889 for the World's Fair in Paris.";
  claim.language = "en";

  const auto queries = evidence::QueryGenerator(gen).Generate(claim);
  std::size_t questions = 0;
  for (const auto& q : queries) {
    if (q.kind != evidence::QueryKind::kQuestion) continue;
    ++questions;
    CHECK(q.text.back() == '?');
  }
  CHECK(questions >= 1);

  evidence::Snippet snippet;
  snippet.doc = std::make_shared<const evidence::EvidenceDoc>(evidence::MakeEvidenceDoc(
      "https://en.wikipedia.org/wiki/Eiffel_Tower", "Eiffel Tower", claim.enriched_text,
      evidence::SourceKind::kEncyclopedia, "en", std::nullopt));
  snippet.text = snippet.doc->content;
  snippet.similarity = 1.0;
  auto models = ModelGateway::Mock();
  models.generator = gen;
  const std::vector<evidence::Snippet> snippets{snippet};
  const std::string summary =
      veracity::VeracityPredictor(models).GenerateJustification(claim, veracity::VeracityLabel::kSupported, snippets);
  CHECK(summary.find("Eiffel Tower") != std::string::npos);
}

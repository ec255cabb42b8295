#include <doctest.h>

#include <random>

#include "factcheck/errors.hpp"
#include "factcheck/evidence/types.hpp"
#include "factcheck/model/mock_backends.hpp"
#include "factcheck/veracity/diff.hpp"
#include "factcheck/veracity/predictor.hpp"
#include "support/oracles.hpp"

using namespace factcheck;
using namespace factcheck::veracity;

namespace {

evidence::Snippet MakeSnippet(std::string text, std::string url = "https://example.org/a") {
  evidence::Snippet s;
  s.doc = std::make_shared<const evidence::EvidenceDoc>(
      evidence::MakeEvidenceDoc(url, "Title", text, evidence::SourceKind::kWebSearch, "en", std::nullopt));
  s.text = std::move(text);
  s.similarity = 0.5;
  return s;
}

claims::Claim MakeClaim(std::string text) {
  claims::Claim c;
  c.id = "c0";
  c.sentence.text = text;
  c.enriched_text = std::move(text);
  c.language = "en";
  return c;
}

StanceVerdict Verdict(bool supports, double confidence) {
  StanceVerdict v;
  v.label = supports ? StanceLabel::kSupports : StanceLabel::kRefutes;
  v.confidence = confidence;
  return v;
}

class EchoGenerator final : public model::Generator {
 public:
  std::string Generate(std::string_view prompt, int) const override {
    return *model::ParsePrompt(prompt).Get("payload");
  }
};

class DownGenerator final : public model::Generator {
 public:
  std::string Generate(std::string_view, int) const override {
    throw Error(ErrorCode::kGeneratorUnavailable, "down");
  }
};

}  // namespace

TEST_CASE("diff examples") {
  CHECK(DiffSpans("a b c", "a b c").empty());
  CHECK(DiffSpans("population 10 million", "population 5.5 million") == std::vector<SpanEdit>{{11, 13, "5.5"}});
  CHECK(DiffSpans("abc", "xyz") == std::vector<SpanEdit>{{0, 3, "xyz"}});
  const std::string original = "Norge har et landareal på 250 000 km2 og cirka 10 millioner innbyggere";
  const std::string corrected = "Norge har et landareal på 385 000 km2 og cirka 5.5 millioner innbyggere";
  const auto edits = DiffSpans(original, corrected);
  REQUIRE(edits.size() == 2);
  CHECK(oracle::ApplyForward(original, std::vector<SpanEdit>{edits[0]}).find("385 000") != std::string::npos);
  CHECK(edits[0].replacement == "385 000");
  CHECK(edits[1].replacement == "5.5");
  CHECK(ApplyEdits(original, edits) == corrected);
}

TEST_CASE("diff handles insertions, deletions and empty sides") {
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"", "new text"}, {"old text", ""}, {"a c", "a b c"}, {"a b c", "a c"}, {"  a  b ", "a b"}, {"x", "x y"}, {"ø å", "æ å"}}) {
    const auto edits = DiffSpans(a, b);
    CHECK(ApplyEdits(a, edits) == b);
    CHECK(oracle::ApplyForward(a, edits) == b);
  }
}

TEST_CASE("diff round-trips random token sequences") {
  std::mt19937_64 rng(3);
  const std::vector<std::string> vocab{"a", "b", "c", "10", "000", "250", "km²", "ø", ",", "5.5"};
  auto random_text = [&] {
    std::string s;
    const int n = rng() % 8;
    for (int i = 0; i < n; ++i) {
      if (i) s += (rng() % 4 == 0) ? "  " : " ";
      s += vocab[rng() % vocab.size()];
    }
    return s;
  };
  for (int i = 0; i < 300; ++i) {
    const std::string a = random_text(), b = random_text();
    const auto edits = DiffSpans(a, b);
    CHECK(ApplyEdits(a, edits) == b);
    for (std::size_t k = 1; k < edits.size(); ++k) CHECK(edits[k - 1].end <= edits[k].start);
  }
}

TEST_CASE("apply edits rejects bad edits") {
  const std::vector<SpanEdit> out_of_range{{2, 9, "x"}};
  CHECK_THROWS_AS(ApplyEdits("abc", out_of_range), Error);
  const std::vector<SpanEdit> overlapping{{0, 2, "x"}, {1, 3, "y"}};
  CHECK_THROWS_AS(ApplyEdits("abc", overlapping), Error);
}

TEST_CASE("aggregation examples") {
  CHECK(AggregateStances({}) == Aggregate{VeracityLabel::kUnverifiable, 0, 0});
  const std::vector<StanceVerdict> ssr{Verdict(true, 0.6), Verdict(true, 0.6), Verdict(false, 0.9)};
  CHECK(AggregateStances(ssr) == Aggregate{VeracityLabel::kSupported, 2, 1});
  const std::vector<StanceVerdict> tie_s{Verdict(true, 0.8), Verdict(false, 0.6)};
  CHECK(AggregateStances(tie_s).label == VeracityLabel::kSupported);
  const std::vector<StanceVerdict> tie_full{Verdict(true, 0.5), Verdict(false, 0.5)};
  CHECK(AggregateStances(tie_full).label == VeracityLabel::kDisputed);
}

TEST_CASE("aggregation is permutation invariant and stable under duplication") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    std::vector<StanceVerdict> v;
    const int n = rng() % 7;
    for (int k = 0; k < n; ++k) v.push_back(Verdict(rng() % 2, (rng() % 4 + 1) * 0.25));
    const auto base = AggregateStances(v);
    auto shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(AggregateStances(shuffled) == base);
    if (base.supports != base.refutes) {
      auto doubled = v;
      doubled.insert(doubled.end(), v.begin(), v.end());
      CHECK(AggregateStances(doubled).label == base.label);
    }
  }
}

TEST_CASE("stance, justification and fixes with mock backends") {
  VeracityPredictor p(model::ModelGateway::Mock());
  const auto claim = MakeClaim("Norway has 10 million people.");
  const auto refute = MakeSnippet("Norway does not have 10 million people; it has 5.5 million people.");
  CHECK(p.ClassifyStance(claim, refute).label == StanceLabel::kRefutes);

  const std::vector<evidence::Snippet> three{MakeSnippet("a one", "https://example.org/1"), MakeSnippet("b two"), MakeSnippet("c three")};
  CHECK(p.GenerateJustification(claim, VeracityLabel::kDisputed, three) ==
        "Based on 3 evidence snippets, the claim appears Disputed. Top source: example.org.");
  CHECK_THROWS_AS(p.GenerateJustification(claim, VeracityLabel::kDisputed, {}), Error);

  const std::vector<evidence::Snippet> ev{refute};
  const auto fix = p.SuggestFix(claim, VeracityLabel::kDisputed, ev);
  REQUIRE(fix.has_value());
  CHECK(fix->corrected_text == "Norway has 5.5 million people.");
  CHECK(fix->edits == std::vector<SpanEdit>{{11, 13, "5.5"}});
}

TEST_CASE("fix is absent when the generator echoes or is down") {
  const auto claim = MakeClaim("Norway has 10 million people.");
  const std::vector<evidence::Snippet> ev{MakeSnippet("Norway has 5.5 million people, not 10 million people.")};
  auto echo = model::ModelGateway::Mock();
  echo.generator = std::make_shared<EchoGenerator>();
  CHECK_FALSE(VeracityPredictor(echo).SuggestFix(claim, VeracityLabel::kDisputed, ev).has_value());
  auto down = model::ModelGateway::Mock();
  down.generator = std::make_shared<DownGenerator>();
  VeracityPredictor p(down);
  CHECK_FALSE(p.SuggestFix(claim, VeracityLabel::kDisputed, ev).has_value());
  CHECK(p.GenerateJustification(claim, VeracityLabel::kDisputed, ev) ==
        "Based on 1 evidence snippets, the claim appears Disputed. Top source: example.org.");
}

TEST_CASE("verify keeps report invariants") {
  VeracityPredictor p(model::ModelGateway::Mock());
  const auto claim = MakeClaim("Norway has 10 million people.");
  const auto none = p.Verify(claim, {});
  CHECK(none.label == VeracityLabel::kUnverifiable);
  CHECK(none.verdicts.empty());
  CHECK(none.justification == kNoEvidenceJustification);
  CHECK_FALSE(none.fix.has_value());

  const std::vector<evidence::Snippet> agree{MakeSnippet("Norway has 10 million people.")};
  const auto supported = p.Verify(claim, agree);
  CHECK(supported.label == VeracityLabel::kSupported);
  CHECK_FALSE(supported.fix.has_value());
  CHECK(supported.supports_count + supported.refutes_count == supported.verdicts.size());

  const std::vector<evidence::Snippet> disagree{MakeSnippet("Norway does not have 10 million people, only 5.5 million people.")};
  const auto disputed = p.Verify(claim, disagree);
  CHECK(disputed.label == VeracityLabel::kDisputed);
  REQUIRE(disputed.fix.has_value());
  CHECK(p.Verify(claim, disagree).justification == disputed.justification);
}

TEST_CASE("label names round-trip") {
  for (auto l : {VeracityLabel::kSupported, VeracityLabel::kDisputed, VeracityLabel::kUnverifiable}) {
    CHECK(ParseVeracityLabel(VeracityLabelName(l)) == l);
  }
}

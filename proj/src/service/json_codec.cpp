#include "factcheck/service/json_codec.hpp"

#include <cmath>

#include "factcheck/errors.hpp"

namespace factcheck::service {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;
using TimePoint = std::chrono::system_clock::time_point;

std::int64_t TicksOf(TimePoint t) { return t.time_since_epoch().count(); }
TimePoint FromTicks(std::int64_t ticks) { return TimePoint(TimePoint::duration(ticks)); }

json SentenceToJson(const claims::Sentence& s) {
  return {{"index", s.index}, {"text", s.text}, {"start", s.start}, {"end", s.end}};
}

claims::Sentence SentenceFromJson(const json& j) {
  return {j.at("index").get<std::size_t>(), j.at("text").get<std::string>(),
          j.at("start").get<std::size_t>(), j.at("end").get<std::size_t>()};
}

json ClaimToJson(const claims::Claim& c) {
  return {{"id", c.id},
          {"article_id", c.article_id},
          {"sentence", SentenceToJson(c.sentence)},
          {"enriched_text", c.enriched_text},
          {"language", c.language},
          {"checkworthy_score", c.checkworthy_score},
          {"status", claims::ClaimStatusName(c.status)}};
}

claims::Claim ClaimFromJson(const json& j) {
  claims::Claim c;
  c.id = j.at("id").get<std::string>();
  c.article_id = j.at("article_id").get<std::string>();
  c.sentence = SentenceFromJson(j.at("sentence"));
  c.enriched_text = j.at("enriched_text").get<std::string>();
  c.language = j.at("language").get<std::string>();
  c.checkworthy_score = j.at("checkworthy_score").get<double>();
  c.status = claims::ParseClaimStatus(j.at("status").get<std::string>());
  return c;
}

json DocToJson(const evidence::EvidenceDoc& d) {
  json j = {{"url", d.url},
            {"domain", d.domain},
            {"title", d.title},
            {"content", d.content},
            {"source_kind", evidence::SourceKindName(d.source_kind)},
            {"language", d.language},
            {"retrieved_at", TicksOf(d.retrieved_at)}};
  j["citation_count"] = d.citation_count ? json(*d.citation_count) : json(nullptr);
  return j;
}

evidence::EvidenceDoc DocFromJson(const json& j) {
  evidence::EvidenceDoc d;
  d.url = j.at("url").get<std::string>();
  d.domain = j.at("domain").get<std::string>();
  d.title = j.at("title").get<std::string>();
  d.content = j.at("content").get<std::string>();
  d.source_kind = evidence::ParseSourceKind(j.at("source_kind").get<std::string>());
  d.language = j.at("language").get<std::string>();
  d.retrieved_at = FromTicks(j.at("retrieved_at").get<std::int64_t>());
  if (!j.at("citation_count").is_null()) d.citation_count = j.at("citation_count").get<std::int64_t>();
  return d;
}

json VerdictToJson(const veracity::StanceVerdict& v) {
  json doc = v.snippet.doc ? DocToJson(*v.snippet.doc) : json(nullptr);
  return {{"claim_id", v.claim_id},
          {"label", model::StanceLabelName(v.label)},
          {"confidence", v.confidence},
          {"snippet",
           {{"doc", doc},
            {"paragraph_index", v.snippet.paragraph_index},
            {"text", v.snippet.text},
            {"similarity", v.snippet.similarity},
            {"rank", v.snippet.rank}}}};
}

veracity::StanceVerdict VerdictFromJson(const json& j) {
  veracity::StanceVerdict v;
  v.claim_id = j.at("claim_id").get<std::string>();
  const auto label = j.at("label").get<std::string>();
  v.label = label == "REFUTES" ? model::StanceLabel::kRefutes : model::StanceLabel::kSupports;
  v.confidence = j.at("confidence").get<double>();
  const auto& s = j.at("snippet");
  if (!s.at("doc").is_null()) v.snippet.doc = std::make_shared<const evidence::EvidenceDoc>(DocFromJson(s.at("doc")));
  v.snippet.paragraph_index = s.at("paragraph_index").get<std::size_t>();
  v.snippet.text = s.at("text").get<std::string>();
  v.snippet.similarity = s.at("similarity").get<double>();
  v.snippet.rank = s.at("rank").get<int>();
  return v;
}

template <typename Json>
Json FixToJson(const std::optional<veracity::ClaimFix>& fix) {
  if (!fix) return Json(nullptr);
  Json edits = Json::array();
  for (const auto& e : fix->edits) {
    Json edit;
    edit["start"] = e.start;
    edit["end"] = e.end;
    edit["replacement"] = e.replacement;
    edits.push_back(std::move(edit));
  }
  Json out;
  out["corrected_text"] = fix->corrected_text;
  out["edits"] = std::move(edits);
  return out;
}

std::optional<veracity::ClaimFix> FixFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  veracity::ClaimFix fix;
  fix.corrected_text = j.at("corrected_text").get<std::string>();
  for (const auto& e : j.at("edits")) {
    fix.edits.push_back({e.at("start").get<std::size_t>(), e.at("end").get<std::size_t>(),
                         e.at("replacement").get<std::string>()});
  }
  return fix;
}

json ReportToJson(const veracity::ClaimReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(VerdictToJson(v));
  return {{"claim", ClaimToJson(r.claim)},
          {"label", veracity::VeracityLabelName(r.label)},
          {"supports_count", r.supports_count},
          {"refutes_count", r.refutes_count},
          {"verdicts", std::move(verdicts)},
          {"justification", r.justification},
          {"fix", FixToJson<json>(r.fix)},
          {"warnings", r.warnings}};
}

veracity::ClaimReport ReportFromJson(const json& j) {
  veracity::ClaimReport r;
  r.claim = ClaimFromJson(j.at("claim"));
  r.label = veracity::ParseVeracityLabel(j.at("label").get<std::string>());
  r.supports_count = j.at("supports_count").get<std::size_t>();
  r.refutes_count = j.at("refutes_count").get<std::size_t>();
  for (const auto& v : j.at("verdicts")) r.verdicts.push_back(VerdictFromJson(v));
  r.justification = j.at("justification").get<std::string>();
  r.fix = FixFromJson(j.at("fix"));
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

double RoundSimilarity(double x) { return std::round(x * 1e6) / 1e6; }

}  // namespace

json JobToRecord(const Job& job) {
  json claims = json::array();
  for (const auto& c : job.claims) claims.push_back(ClaimToJson(c));
  json reports = json::array();
  for (const auto& r : job.reports) reports.push_back(ReportToJson(r));
  return {{"id", job.id},
          {"article_text", job.article_text},
          {"language", job.language},
          {"status", JobStatusName(job.status)},
          {"claims", std::move(claims)},
          {"reports", std::move(reports)},
          {"error", job.error},
          {"created_at", TicksOf(job.created_at)},
          {"updated_at", TicksOf(job.updated_at)}};
}

Job JobFromRecord(const json& j) {
  Job job;
  job.id = j.at("id").get<std::string>();
  job.article_text = j.at("article_text").get<std::string>();
  job.language = j.at("language").get<std::string>();
  job.status = ParseJobStatus(j.at("status").get<std::string>());
  for (const auto& c : j.at("claims")) job.claims.push_back(ClaimFromJson(c));
  for (const auto& r : j.at("reports")) job.reports.push_back(ReportFromJson(r));
  job.error = j.at("error").get<std::string>();
  job.created_at = FromTicks(j.at("created_at").get<std::int64_t>());
  job.updated_at = FromTicks(j.at("updated_at").get<std::int64_t>());
  return job;
}

ordered_json JobToApiPayload(const Job& job) {
  ordered_json claims = ordered_json::array();
  for (const auto& claim : job.claims) {
    const veracity::ClaimReport* report = nullptr;
    for (const auto& r : job.reports) {
      if (r.claim.id == claim.id) {
        report = &r;
        break;
      }
    }
    ordered_json c;
    c["id"] = claim.id;
    c["start"] = claim.sentence.start;
    c["end"] = claim.sentence.end;
    c["text"] = claim.sentence.text;
    if (!report) {
      c["status"] = claims::ClaimStatusName(claim.status);
      c["label"] = nullptr;
      c["supports"] = 0;
      c["refutes"] = 0;
      c["justification"] = nullptr;
      c["fix"] = nullptr;
      c["evidence"] = ordered_json::array();
    } else {
      c["status"] = claims::ClaimStatusName(report->claim.status);
      c["label"] = veracity::VeracityLabelName(report->label);
      c["supports"] = report->supports_count;
      c["refutes"] = report->refutes_count;
      c["justification"] = report->justification;
      c["fix"] = FixToJson<ordered_json>(report->fix);
      ordered_json evidence = ordered_json::array();
      for (const auto& v : report->verdicts) {
        ordered_json e;
        e["url"] = v.snippet.doc ? v.snippet.doc->url : "";
        e["title"] = v.snippet.doc ? v.snippet.doc->title : "";
        e["snippet"] = v.snippet.text;
        e["similarity"] = RoundSimilarity(v.snippet.similarity);
        e["stance"] = model::StanceLabelName(v.label);
        evidence.push_back(std::move(e));
      }
      c["evidence"] = std::move(evidence);
    }
    claims.push_back(std::move(c));
  }
  ordered_json out;
  out["status"] = JobStatusName(job.status);
  out["language"] = job.language;
  out["claims"] = std::move(claims);
  return out;
}

}  // namespace factcheck::service

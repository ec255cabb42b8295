#include "factcheck/service/job.hpp"

#include "factcheck/errors.hpp"

namespace factcheck::service {

std::string_view JobStatusName(JobStatus status) {
  switch (status) {
    case JobStatus::kPending: return "Pending";
    case JobStatus::kRunning: return "Running";
    case JobStatus::kDone: return "Done";
    case JobStatus::kFailed: return "Failed";
  }
  return "Pending";
}

JobStatus ParseJobStatus(std::string_view name) {
  if (name == "Pending") return JobStatus::kPending;
  if (name == "Running") return JobStatus::kRunning;
  if (name == "Done") return JobStatus::kDone;
  if (name == "Failed") return JobStatus::kFailed;
  throw Error(ErrorCode::kInvalidInput, "unknown job status: " + std::string(name));
}

bool CanTransition(JobStatus from, JobStatus to) {
  switch (from) {
    case JobStatus::kPending: return to == JobStatus::kRunning || to == JobStatus::kFailed;
    case JobStatus::kRunning: return to == JobStatus::kDone || to == JobStatus::kFailed;
    default: return false;
  }
}

bool operator==(const Job& a, const Job& b) {
  return a.id == b.id && a.article_text == b.article_text && a.language == b.language &&
         a.status == b.status && a.claims == b.claims && a.reports == b.reports &&
         a.error == b.error && a.created_at == b.created_at && a.updated_at == b.updated_at;
}

}  // namespace factcheck::service

namespace factcheck::evidence {
bool operator==(const Snippet& a, const Snippet& b) {
  const bool docs_equal = (a.doc == b.doc) || (a.doc && b.doc && *a.doc == *b.doc);
  return docs_equal && a.paragraph_index == b.paragraph_index && a.text == b.text &&
         a.similarity == b.similarity && a.rank == b.rank;
}
}  // namespace factcheck::evidence

namespace factcheck::veracity {
bool operator==(const StanceVerdict& a, const StanceVerdict& b) {
  return a.claim_id == b.claim_id && a.snippet == b.snippet && a.label == b.label &&
         a.confidence == b.confidence;
}

bool operator==(const ClaimReport& a, const ClaimReport& b) {
  return a.claim == b.claim && a.label == b.label && a.supports_count == b.supports_count &&
         a.refutes_count == b.refutes_count && a.verdicts == b.verdicts &&
         a.justification == b.justification && a.fix == b.fix && a.warnings == b.warnings;
}
}  // namespace factcheck::veracity

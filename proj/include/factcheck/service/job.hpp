#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/claims/types.hpp"
#include "factcheck/veracity/types.hpp"

namespace factcheck::service {

enum class JobStatus { kPending, kRunning, kDone, kFailed };

std::string_view JobStatusName(JobStatus status);
JobStatus ParseJobStatus(std::string_view name);

// Legal moves: Pending -> Running -> {Done, Failed}; Pending -> Failed.
bool CanTransition(JobStatus from, JobStatus to);

struct Job {
  std::string id;
  std::string article_text;
  std::string language;
  JobStatus status = JobStatus::kPending;
  // Every detected claim, in article order.
  std::vector<claims::Claim> claims;
  // Finished reports, ordered like claims. Complete once status is Done.
  std::vector<veracity::ClaimReport> reports;
  std::string error;
  std::chrono::system_clock::time_point created_at{};
  std::chrono::system_clock::time_point updated_at{};
};

bool operator==(const Job& a, const Job& b);

}  // namespace factcheck::service

namespace factcheck::evidence {
bool operator==(const Snippet& a, const Snippet& b);
}

namespace factcheck::veracity {
bool operator==(const StanceVerdict& a, const StanceVerdict& b);
bool operator==(const ClaimReport& a, const ClaimReport& b);
}  // namespace factcheck::veracity

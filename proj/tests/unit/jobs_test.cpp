#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "factcheck/service/job_store.hpp"
#include "factcheck/service/json_codec.hpp"
#include "support/oracles.hpp"
#include "support/random_jobs.hpp"

using namespace factcheck;
using namespace factcheck::service;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("factcheck-jobs-" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("job status transitions") {
  CHECK(CanTransition(JobStatus::kPending, JobStatus::kRunning));
  CHECK(CanTransition(JobStatus::kPending, JobStatus::kFailed));
  CHECK(CanTransition(JobStatus::kRunning, JobStatus::kDone));
  CHECK(CanTransition(JobStatus::kRunning, JobStatus::kFailed));
  CHECK_FALSE(CanTransition(JobStatus::kDone, JobStatus::kRunning));
  CHECK_FALSE(CanTransition(JobStatus::kPending, JobStatus::kDone));
  CHECK_FALSE(CanTransition(JobStatus::kFailed, JobStatus::kPending));
  for (auto s : {JobStatus::kPending, JobStatus::kRunning, JobStatus::kDone, JobStatus::kFailed}) {
    CHECK(ParseJobStatus(JobStatusName(s)) == s);
  }
}

TEST_CASE("job records round-trip losslessly") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const Job job = fixtures::RandomJob(rng, i);
    const auto record = JobToRecord(job);
    CHECK(JobFromRecord(nlohmann::json::parse(record.dump())) == job);
  }
}

TEST_CASE("api payload shape") {
  std::mt19937_64 rng(4);
  Job job = fixtures::RandomJob(rng, 1);
  job.status = JobStatus::kRunning;
  const auto payload = JobToApiPayload(job);
  CHECK(payload["status"] == "Running");
  REQUIRE(payload["claims"].size() == job.claims.size());
  std::size_t with_label = 0;
  for (const auto& c : payload["claims"]) {
    for (const char* key : {"id", "start", "end", "text", "status", "label", "supports", "refutes", "justification", "fix", "evidence"}) {
      CHECK(c.contains(key));
    }
    if (!c["label"].is_null()) ++with_label;
  }
  CHECK(with_label == job.reports.size());
}

TEST_CASE("store persists across reopen and keeps the latest record") {
  TempDir dir;
  const auto path = dir.path / "jobs.jsonl";
  std::mt19937_64 rng(8);
  std::vector<Job> jobs;
  {
    JobStore store(path);
    for (int i = 0; i < 20; ++i) {
      jobs.push_back(fixtures::RandomJob(rng, i));
      store.Put(jobs.back());
    }
    jobs[3].status = JobStatus::kDone;
    store.Put(jobs[3]);
  }
  JobStore reopened(path);
  CHECK(reopened.corrupt_records().empty());
  REQUIRE(reopened.All().size() == jobs.size());
  for (const auto& job : jobs) {
    const auto got = reopened.Get(job.id);
    REQUIRE(got.has_value());
    CHECK(*got == job);
  }
  CHECK_FALSE(reopened.Get("missing").has_value());
}

TEST_CASE("a torn final record is skipped and later writes still land") {
  TempDir dir;
  const auto path = dir.path / "jobs.jsonl";
  std::mt19937_64 rng(10);
  std::vector<Job> jobs;
  {
    JobStore store(path);
    for (int i = 0; i < 5; ++i) {
      jobs.push_back(fixtures::RandomJob(rng, i));
      store.Put(jobs.back());
    }
  }
  const auto size = std::filesystem::file_size(path);
  std::filesystem::resize_file(path, size - 7);
  {
    JobStore store(path);
    CHECK(store.corrupt_records() == std::vector<std::size_t>{5});
    CHECK(store.All().size() == 4);
    jobs.push_back(fixtures::RandomJob(rng, 99));
    store.Put(jobs.back());
  }
  JobStore again(path);
  CHECK(again.All().size() == 5);
  CHECK(*again.Get(jobs.back().id) == jobs.back());
}

TEST_CASE("in-memory store") {
  JobStore store;
  std::mt19937_64 rng(2);
  const Job job = fixtures::RandomJob(rng, 0);
  store.Put(job);
  CHECK(*store.Get(job.id) == job);
}

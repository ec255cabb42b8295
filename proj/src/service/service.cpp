#include "factcheck/service/service.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>

#include "factcheck/concurrency.hpp"
#include "factcheck/errors.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::service {
namespace {

std::chrono::system_clock::time_point Now() { return std::chrono::system_clock::now(); }

}  // namespace

FactCheckService::FactCheckService(std::shared_ptr<const FactCheckPipeline> pipeline,
                                   LanguageIdentifier languages, std::shared_ptr<JobStore> store,
                                   ServiceConfig config)
    : pipeline_(std::move(pipeline)),
      languages_(std::move(languages)),
      store_(store ? std::move(store) : std::make_shared<JobStore>()),
      config_(config),
      rng_(std::random_device{}()) {
  for (Job& job : store_->All()) {
    if (job.status == JobStatus::kRunning) {
      job.status = JobStatus::kFailed;
      job.error = "interrupted by restart";
      Save(job);
    } else if (job.status == JobStatus::kPending) {
      queue_.push_back(job.id);
    }
  }
  const std::size_t n = std::max<std::size_t>(config_.job_workers, 1);
  for (std::size_t i = 0; i < n; ++i) {
    workers_.emplace_back([this](std::stop_token stop) { WorkerLoop(stop); });
  }
}

FactCheckService::~FactCheckService() { Shutdown(); }

void FactCheckService::Shutdown() {
  {
    std::lock_guard lock(mu_);
    if (stopped_) return;
    stopped_ = true;
  }
  for (auto& w : workers_) w.request_stop();
  work_cv_.notify_all();
  workers_.clear();
  idle_cv_.notify_all();
}

std::string FactCheckService::NewJobId() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  std::lock_guard lock(mu_);
  for (int part = 0; part < 2; ++part) {
    std::uint64_t bits = rng_();
    for (int i = 0; i < 16; ++i, bits >>= 4) id.push_back(kHex[bits & 0xF]);
  }
  return id;
}

void FactCheckService::Save(Job& job) {
  job.updated_at = std::max(Now(), job.created_at);
  store_->Put(job);
}

std::string FactCheckService::Submit(std::string article_text,
                                     std::optional<std::string> language) {
  if (text::Trim(article_text).empty()) throw Error(ErrorCode::kEmptyText, "article text is empty");
  const std::size_t length = text::Length(article_text);
  if (length > config_.max_chars) {
    throw Error(ErrorCode::kPayloadTooLarge, std::to_string(length) + " characters exceeds limit of " +
                                                 std::to_string(config_.max_chars));
  }

  Job job;
  do {
    job.id = NewJobId();
  } while (store_->Get(job.id));
  job.language = language && !language->empty() ? *language : languages_.Detect(article_text);
  job.article_text = std::move(article_text);
  job.created_at = Now();
  Save(job);

  {
    std::lock_guard lock(mu_);
    if (stopped_) throw Error(ErrorCode::kInvalidInput, "service is shut down");
    queue_.push_back(job.id);
  }
  work_cv_.notify_one();
  return job.id;
}

Job FactCheckService::Get(const std::string& job_id) const {
  auto job = store_->Get(job_id);
  if (!job) throw Error(ErrorCode::kNotFound, "no job " + job_id);
  return *job;
}

void FactCheckService::WaitIdle() {
  std::unique_lock lock(mu_);
  idle_cv_.wait(lock, [&] { return stopped_ || (queue_.empty() && active_ == 0); });
}

void FactCheckService::WorkerLoop(std::stop_token stop) {
  while (true) {
    std::string id;
    {
      std::unique_lock lock(mu_);
      if (!work_cv_.wait(lock, stop, [&] { return !queue_.empty(); }) || stop.stop_requested()) return;
      id = std::move(queue_.front());
      queue_.pop_front();
      ++active_;
    }
    try {
      Execute(id);
    } catch (const std::exception& e) {
      spdlog::error("job {} aborted: {}", id, e.what());
    }
    {
      std::lock_guard lock(mu_);
      --active_;
    }
    idle_cv_.notify_all();
  }
}

void FactCheckService::Execute(const std::string& job_id) {
  auto loaded = store_->Get(job_id);
  if (!loaded || loaded->status != JobStatus::kPending) return;
  Job job = std::move(*loaded);
  job.status = JobStatus::kRunning;
  Save(job);

  std::vector<claims::Claim> detected;
  try {
    detected = pipeline_->Detect(job.article_text, job.language, job.id);
  } catch (const std::exception& e) {
    job.status = JobStatus::kFailed;
    job.error = e.what();
    Save(job);
    return;
  }
  job.claims = detected;
  for (auto& c : job.claims) {
    if (c.status != claims::ClaimStatus::kFailed) c.status = claims::ClaimStatus::kVerifying;
  }
  Save(job);

  // Job state is shared by the claim workers; reports are slotted in by
  // claim position so the Running view never reorders.
  std::mutex job_mu;
  std::vector<bool> finished(detected.size(), false);
  ParallelFor(detected.size(), config_.claims_parallel, [&](std::size_t i) {
    veracity::ClaimReport report;
    try {
      report = pipeline_->Verify(detected[i]);
    } catch (const std::exception& e) {
      report = FailedReport(detected[i], e.what());
    }
    std::lock_guard lock(job_mu);
    const auto before = std::count(finished.begin(), finished.begin() + i, true);
    job.reports.insert(job.reports.begin() + before, std::move(report));
    finished[i] = true;
    job.claims[i].status = job.reports[before].claim.status;
    Save(job);
  });

  job.status = JobStatus::kDone;
  Save(job);
}

}  // namespace factcheck::service

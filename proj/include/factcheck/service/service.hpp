#pragma once

#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "factcheck/service/job.hpp"
#include "factcheck/service/job_store.hpp"
#include "factcheck/service/language.hpp"
#include "factcheck/service/pipeline.hpp"

namespace factcheck::service {

struct ServiceConfig {
  std::size_t job_workers = 2;
  std::size_t claims_parallel = 4;
  std::size_t max_chars = 100'000;
};

// Runs submitted articles through the pipeline on a small worker pool and
// keeps every state change in the job store. Reports appear one claim at a
// time, in claim order, while a job is Running.
class FactCheckService {
 public:
  FactCheckService(std::shared_ptr<const FactCheckPipeline> pipeline, LanguageIdentifier languages,
                   std::shared_ptr<JobStore> store, ServiceConfig config = {});
  ~FactCheckService();

  FactCheckService(const FactCheckService&) = delete;
  FactCheckService& operator=(const FactCheckService&) = delete;

  // Throws EmptyText or PayloadTooLarge. Language is detected when absent.
  std::string Submit(std::string article_text, std::optional<std::string> language = std::nullopt);

  // Throws NotFound.
  Job Get(const std::string& job_id) const;

  // Blocks until the queue is drained and no job is executing.
  void WaitIdle();

  // Stops accepting work and joins the workers. Queued jobs stay Pending.
  void Shutdown();

 private:
  void WorkerLoop(std::stop_token stop);
  void Execute(const std::string& job_id);
  void Save(Job& job);
  std::string NewJobId();

  std::shared_ptr<const FactCheckPipeline> pipeline_;
  LanguageIdentifier languages_;
  std::shared_ptr<JobStore> store_;
  ServiceConfig config_;

  mutable std::mutex mu_;
  std::condition_variable_any work_cv_;
  std::condition_variable idle_cv_;
  std::deque<std::string> queue_;
  std::size_t active_ = 0;
  bool stopped_ = false;
  std::mt19937_64 rng_;
  std::vector<std::jthread> workers_;
};

}  // namespace factcheck::service

#include "factcheck/service/job_store.hpp"

#include <spdlog/spdlog.h>

#include <json.hpp>

#include "factcheck/errors.hpp"
#include "factcheck/service/json_codec.hpp"

namespace factcheck::service {

JobStore::JobStore(std::filesystem::path path) : path_(std::move(path)) {
  if (path_.empty()) return;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());

  bool needs_newline = false;
  if (std::ifstream in{path_, std::ios::binary}) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      needs_newline = in.eof();
      if (line.empty()) continue;
      try {
        Job job = JobFromRecord(nlohmann::json::parse(line));
        jobs_[job.id] = std::move(job);
      } catch (const std::exception& e) {
        spdlog::warn("job log {}: skipping corrupt record at line {}: {}", path_.string(), line_no,
                     e.what());
        corrupt_.push_back(line_no);
      }
    }
  }

  out_.open(path_, std::ios::binary | std::ios::app);
  if (!out_) throw Error(ErrorCode::kIoError, "cannot open job log " + path_.string());
  // A torn final line must not swallow the next record.
  if (needs_newline) out_ << '\n';
}

void JobStore::Put(const Job& job) {
  std::lock_guard lock(mu_);
  if (out_.is_open()) {
    out_ << JobToRecord(job).dump() << '\n';
    out_.flush();
    if (!out_) throw Error(ErrorCode::kIoError, "write failed on job log " + path_.string());
  }
  jobs_[job.id] = job;
}

std::optional<Job> JobStore::Get(const std::string& id) const {
  std::lock_guard lock(mu_);
  const auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  return it->second;
}

std::vector<Job> JobStore::All() const {
  std::lock_guard lock(mu_);
  std::vector<Job> out;
  out.reserve(jobs_.size());
  for (const auto& [id, job] : jobs_) out.push_back(job);
  return out;
}

}  // namespace factcheck::service

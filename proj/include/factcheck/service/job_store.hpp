#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "factcheck/service/job.hpp"

namespace factcheck::service {

// Append-only JSON-lines log with an in-memory index. Each Put appends the
// full job; on open the latest record per id wins. Lines that fail to parse
// are skipped and listed in corrupt_records(). An empty path keeps jobs in
// memory only.
class JobStore {
 public:
  JobStore() = default;
  explicit JobStore(std::filesystem::path path);

  JobStore(const JobStore&) = delete;
  JobStore& operator=(const JobStore&) = delete;

  void Put(const Job& job);
  std::optional<Job> Get(const std::string& id) const;
  // Ordered by id.
  std::vector<Job> All() const;

  // 1-based line numbers of records that could not be read.
  const std::vector<std::size_t>& corrupt_records() const { return corrupt_; }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  mutable std::mutex mu_;
  std::map<std::string, Job> jobs_;
  std::vector<std::size_t> corrupt_;
};

}  // namespace factcheck::service

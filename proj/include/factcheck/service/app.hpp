#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "factcheck/claims/detector.hpp"
#include "factcheck/evidence/retriever.hpp"
#include "factcheck/model/backends.hpp"
#include "factcheck/service/pipeline.hpp"
#include "factcheck/veracity/predictor.hpp"

namespace factcheck::service {

// Everything needed to assemble a pipeline from files on disk.
struct AppConfig {
  // Holds prompts/, abbrev/, langprofiles/ and blocklist.txt.
  std::filesystem::path data_dir;
  // Search replay root; empty means live adapters configured from the
  // environment.
  std::filesystem::path replay_dir;
  // Defaults to <data_dir>/blocklist.txt.
  std::filesystem::path blocklist;
  std::vector<std::string> adapters = {"factcheck", "encyclopedia", "websearch", "scholarly"};
  // "mock" or "remote" (see ModelGateway::FromEnvironment).
  std::string backend = "mock";
  // Empty keeps jobs in memory.
  std::filesystem::path job_log;
  std::string host = "0.0.0.0";
  int port = 8080;

  // Reads a JSON object with any of the keys data_dir, replay_dir,
  // blocklist, adapters, backend, job_log, host, port. Relative paths are
  // resolved against the file's directory.
  static AppConfig FromJsonFile(const std::filesystem::path& path);

  std::filesystem::path BlocklistPath() const;
};

model::ModelGateway BuildModels(const AppConfig& config);
claims::ClaimDetector BuildDetector(const AppConfig& config, const model::ModelGateway& models);
evidence::EvidenceRetriever BuildRetriever(const AppConfig& config, const model::ModelGateway& models);
veracity::VeracityPredictor BuildPredictor(const AppConfig& config, const model::ModelGateway& models);
std::shared_ptr<FactCheckPipeline> BuildPipeline(const AppConfig& config,
                                                 const model::ModelGateway& models);

}  // namespace factcheck::service

#include "factcheck/service/app.hpp"

#include <fstream>

#include <json.hpp>

#include "factcheck/errors.hpp"
#include "factcheck/model/transport.hpp"

namespace factcheck::service {
namespace {

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& value) {
  std::filesystem::path p(value);
  return p.is_relative() ? base / p : p;
}

model::PromptLibrary Prompts(const AppConfig& config) {
  const auto dir = config.data_dir / "prompts";
  return std::filesystem::is_directory(dir) ? model::PromptLibrary(dir) : model::PromptLibrary();
}

}  // namespace

AppConfig AppConfig::FromJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, "config " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kInvalidInput, "config must be a JSON object");
  const auto base = path.parent_path();
  AppConfig c;
  try {
    if (j.contains("data_dir")) c.data_dir = Resolve(base, j["data_dir"].get<std::string>());
    if (j.contains("replay_dir")) c.replay_dir = Resolve(base, j["replay_dir"].get<std::string>());
    if (j.contains("blocklist")) c.blocklist = Resolve(base, j["blocklist"].get<std::string>());
    if (j.contains("job_log")) c.job_log = Resolve(base, j["job_log"].get<std::string>());
    if (j.contains("adapters")) c.adapters = j["adapters"].get<std::vector<std::string>>();
    if (j.contains("backend")) c.backend = j["backend"].get<std::string>();
    if (j.contains("host")) c.host = j["host"].get<std::string>();
    if (j.contains("port")) c.port = j["port"].get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, "config " + path.string() + ": " + e.what());
  }
  return c;
}

std::filesystem::path AppConfig::BlocklistPath() const {
  return blocklist.empty() ? data_dir / "blocklist.txt" : blocklist;
}

model::ModelGateway BuildModels(const AppConfig& config) {
  if (config.backend == "mock") return model::ModelGateway::Mock();
  if (config.backend == "remote") return model::ModelGateway::FromEnvironment();
  throw Error(ErrorCode::kInvalidInput, "unknown backend: " + config.backend);
}

claims::ClaimDetector BuildDetector(const AppConfig& config, const model::ModelGateway& models) {
  const auto abbrev_dir = config.data_dir / "abbrev";
  auto abbreviations = std::filesystem::is_directory(abbrev_dir)
                           ? claims::AbbreviationTable::LoadDirectory(abbrev_dir)
                           : claims::AbbreviationTable();
  return claims::ClaimDetector(std::make_shared<claims::RuleSegmenter>(std::move(abbreviations)),
                               models, Prompts(config));
}

evidence::EvidenceRetriever BuildRetriever(const AppConfig& config,
                                           const model::ModelGateway& models) {
  evidence::AdapterSet adapters;
  std::shared_ptr<const model::Transport> transport;
  for (const auto& name : config.adapters) {
    if (!config.replay_dir.empty()) {
      adapters.Add(std::make_shared<evidence::ReplaySearchAdapter>(name, config.replay_dir));
      continue;
    }
    if (!transport) transport = std::make_shared<model::HttpTransport>();
    if (auto live = evidence::HttpSearchAdapter::FromEnvironment(name, transport)) {
      adapters.Add(std::move(live));
    }
  }
  const auto blocklist_path = config.BlocklistPath();
  auto blocklist = std::filesystem::exists(blocklist_path)
                       ? evidence::Blocklist::LoadFile(blocklist_path)
                       : evidence::Blocklist();
  return evidence::EvidenceRetriever(evidence::QueryGenerator(models.generator, Prompts(config)),
                                     std::move(adapters), std::move(blocklist), models.embedder);
}

veracity::VeracityPredictor BuildPredictor(const AppConfig& config,
                                           const model::ModelGateway& models) {
  return veracity::VeracityPredictor(models, Prompts(config));
}

std::shared_ptr<FactCheckPipeline> BuildPipeline(const AppConfig& config,
                                                 const model::ModelGateway& models) {
  return std::make_shared<FactCheckPipeline>(BuildDetector(config, models),
                                             BuildRetriever(config, models),
                                             BuildPredictor(config, models));
}

}  // namespace factcheck::service

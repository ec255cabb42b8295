#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <csignal>

#include "factcheck/errors.hpp"
#include "factcheck/service/app.hpp"
#include "factcheck/service/http_api.hpp"
#include "factcheck/service/job_store.hpp"
#include "factcheck/service/language.hpp"
#include "factcheck/service/service.hpp"

namespace {

factcheck::service::HttpApi* g_api = nullptr;

void OnSignal(int) {
  if (g_api) g_api->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace factcheck::service;

  CLI::App app{"Fact-checking REST service"};
  std::string config_path, replay_dir, blocklist, data_dir, job_log, backend, host;
  int port = 0;
  app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--port", port, "Listen port (default 8080)");
  app.add_option("--host", host, "Listen address (default 0.0.0.0)");
  app.add_option("--replay-dir", replay_dir, "Serve search results from recorded fixtures");
  app.add_option("--blocklist", blocklist, "Domain blocklist file");
  app.add_option("--data-dir", data_dir, "Prompts, abbreviations and language profiles");
  app.add_option("--job-log", job_log, "Append-only job log (default: in memory)");
  app.add_option("--backend", backend, "Model backend")->check(CLI::IsMember({"mock", "remote"}));
  CLI11_PARSE(app, argc, argv);
  spdlog::set_default_logger(spdlog::stderr_color_mt("factcheck"));

  try {
    AppConfig config = config_path.empty() ? AppConfig{} : AppConfig::FromJsonFile(config_path);
    if (config.data_dir.empty()) config.data_dir = FACTCHECK_DEFAULT_DATA_DIR;
    if (!data_dir.empty()) config.data_dir = data_dir;
    if (!replay_dir.empty()) config.replay_dir = replay_dir;
    if (!blocklist.empty()) config.blocklist = blocklist;
    if (!job_log.empty()) config.job_log = job_log;
    if (!backend.empty()) config.backend = backend;
    if (!host.empty()) config.host = host;
    if (port != 0) config.port = port;

    const auto models = BuildModels(config);
    auto store = std::make_shared<JobStore>(config.job_log);
    for (std::size_t line : store->corrupt_records()) {
      spdlog::warn("job log line {} is corrupt and was skipped", line);
    }
    FactCheckService service(BuildPipeline(config, models),
                             LanguageIdentifier::LoadDirectory(config.data_dir / "langprofiles"),
                             store);
    HttpApi api(service);
    g_api = &api;
    std::signal(SIGINT, OnSignal);
    std::signal(SIGTERM, OnSignal);

    spdlog::info("listening on {}:{}", config.host, config.port);
    const bool ok = api.Listen(config.host, config.port);
    g_api = nullptr;
    if (!ok) {
      spdlog::error("cannot listen on {}:{}", config.host, config.port);
      return 1;
    }
    service.Shutdown();
  } catch (const factcheck::Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}

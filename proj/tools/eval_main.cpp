#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "factcheck/errors.hpp"
#include "factcheck/eval/dataset.hpp"
#include "factcheck/eval/harness.hpp"
#include "factcheck/service/app.hpp"

int main(int argc, char** argv) {
  using namespace factcheck;

  CLI::App app{"Per-language Macro/Micro-F1 for claim detection and veracity"};
  std::string task = "claims", data, backend = "mock", report = "table", out, data_dir;
  std::size_t parallel = 4;
  app.add_option("--task", task, "claims or veracity")->check(CLI::IsMember({"claims", "veracity"}));
  app.add_option("--data", data, "Dataset TSV")->required()->check(CLI::ExistingFile);
  app.add_option("--backend", backend, "mock or remote")->check(CLI::IsMember({"mock", "remote"}));
  app.add_option("--report", report, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_option("--data-dir", data_dir, "Prompts and abbreviations");
  app.add_option("--parallel", parallel, "Records scored concurrently");
  CLI11_PARSE(app, argc, argv);
  spdlog::set_default_logger(spdlog::stderr_color_mt("factcheck"));

  try {
    service::AppConfig config;
    config.data_dir = data_dir.empty() ? FACTCHECK_DEFAULT_DATA_DIR : data_dir;
    config.backend = backend;
    const auto models = service::BuildModels(config);
    const auto dataset = eval::LoadDataset(data);
    const auto run = eval::RunEval(dataset, eval::ParseTask(task), service::BuildDetector(config, models),
                                   service::BuildPredictor(config, models), parallel);
    if (run.skipped > 0) spdlog::info("{} records skipped", run.skipped);

    const std::string text = eval::EmitReport(run.rows, eval::ParseReportFormat(report));
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream file(out, std::ios::binary);
      if (!(file << text)) throw Error(ErrorCode::kIoError, "cannot write " + out);
    }
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}

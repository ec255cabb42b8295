#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace factcheck::model {

// Prompts sent to a Generator start with `#key: value` header lines (the
// first is always `#task: <name>`), then a blank line, then the rendered
// template. Header values are single-line; newlines are folded to spaces.
// Remote models see the whole prompt; the mock generator reads the headers.
using PromptHeaders = std::vector<std::pair<std::string, std::string>>;

std::string BuildPrompt(std::string_view task, const PromptHeaders& headers, std::string_view body);

struct ParsedPrompt {
  std::string task;
  PromptHeaders headers;
  std::string body;

  // First value for key, or nullptr.
  const std::string* Get(std::string_view key) const;
  std::vector<std::string> GetAll(std::string_view key) const;
};

ParsedPrompt ParsePrompt(std::string_view prompt);

// Prompt templates keyed by task name (coref, query_gen, justify, fix,
// checkworthy) with `{placeholder}` substitution. Built-in defaults are
// overridden by `<dir>/<name>.txt` files when present.
class PromptLibrary {
 public:
  PromptLibrary();
  explicit PromptLibrary(const std::filesystem::path& dir);

  const std::string& Template(std::string_view name) const;

  std::string Render(std::string_view name, const std::map<std::string, std::string>& vars) const;

 private:
  std::map<std::string, std::string, std::less<>> templates_;
};

}  // namespace factcheck::model

#include "factcheck/model/prompt.hpp"

#include <fstream>
#include <sstream>

#include "factcheck/errors.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::model {
namespace {

std::string FoldLine(std::string_view value) {
  std::string out(value);
  for (char& c : out) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

const std::map<std::string, std::string, std::less<>>& BuiltinTemplates() {
  static const std::map<std::string, std::string, std::less<>> kTemplates = {
      {"coref",
       "Rewrite the target sentence so it can be understood on its own. Replace pronouns and "
       "vague references with the named entities they refer to, using the preceding context. "
       "Keep the language ({language}) and change nothing else. Reply with the rewritten "
       "sentence only.\n\nContext: {context}\nTarget sentence: {sentence}\n"},
      {"query_gen",
       "Write up to three short questions, one per line, that a fact-checker would type into a "
       "search engine to verify the claim below. Write them in {language}. Each line must end "
       "with a question mark.\n\nClaim: {claim}\n"},
      {"justify",
       "The claim below was judged {label} after reading the evidence snippets. Summarize in two "
       "or three sentences, in {language}, how the evidence relates to the claim.\n\nClaim: "
       "{claim}\n\nEvidence:\n{evidence}\n"},
      {"fix",
       "The claim below is disputed by the evidence. Rewrite the claim with the smallest possible "
       "change so that it agrees with the evidence. Keep its language and wording otherwise. "
       "Reply with the corrected sentence only.\n\nClaim: {claim}\n\nEvidence:\n{evidence}\n"},
      {"checkworthy",
       "Decide whether a sentence contains a factual claim worth fact-checking. Think step by "
       "step, then finish with 'Answer: Yes' or 'Answer: No'.\n\n"
       "Sentence: The unemployment rate fell to 3.9 percent in April.\n"
       "Reasoning: It states a measurable statistic that can be verified against official data.\n"
       "Answer: Yes\n\n"
       "Sentence: I think the new park looks wonderful.\n"
       "Reasoning: It is a personal opinion with no verifiable fact.\n"
       "Answer: No\n\n"
       "Sentence: {sentence}\nReasoning:"},
  };
  return kTemplates;
}

}  // namespace

std::string BuildPrompt(std::string_view task, const PromptHeaders& headers, std::string_view body) {
  std::string out = "#task: ";
  out += FoldLine(task);
  out += '\n';
  for (const auto& [key, value] : headers) {
    out += '#';
    out += key;
    out += ": ";
    out += FoldLine(value);
    out += '\n';
  }
  out += '\n';
  out += body;
  return out;
}

const std::string* ParsedPrompt::Get(std::string_view key) const {
  for (const auto& [k, v] : headers) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::vector<std::string> ParsedPrompt::GetAll(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : headers) {
    if (k == key) out.push_back(v);
  }
  return out;
}

ParsedPrompt ParsePrompt(std::string_view prompt) {
  ParsedPrompt parsed;
  std::size_t pos = 0;
  while (pos < prompt.size() && prompt[pos] == '#') {
    auto eol = prompt.find('\n', pos);
    if (eol == std::string_view::npos) eol = prompt.size();
    const std::string_view line = prompt.substr(pos + 1, eol - pos - 1);
    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      std::string key(text::Trim(line.substr(0, colon)));
      std::string value(line.substr(colon + 1));
      if (!value.empty() && value.front() == ' ') value.erase(0, 1);
      if (key == "task" && parsed.task.empty()) {
        parsed.task = std::string(text::Trim(value));
      } else {
        parsed.headers.emplace_back(std::move(key), std::move(value));
      }
    }
    pos = eol + 1;
  }
  if (pos < prompt.size() && prompt[pos] == '\n') ++pos;
  if (pos < prompt.size()) parsed.body = std::string(prompt.substr(pos));
  return parsed;
}

PromptLibrary::PromptLibrary() : templates_(BuiltinTemplates()) {}

PromptLibrary::PromptLibrary(const std::filesystem::path& dir) : PromptLibrary() {
  for (auto& [name, body] : templates_) {
    std::ifstream in(dir / (name + ".txt"), std::ios::binary);
    if (!in) continue;
    std::ostringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
}

const std::string& PromptLibrary::Template(std::string_view name) const {
  const auto it = templates_.find(name);
  if (it == templates_.end()) {
    throw Error(ErrorCode::kInvalidInput, "unknown prompt template: " + std::string(name));
  }
  return it->second;
}

std::string PromptLibrary::Render(std::string_view name,
                                  const std::map<std::string, std::string>& vars) const {
  return text::Substitute(Template(name), [&](std::string_view key) -> const std::string* {
    const auto it = vars.find(std::string(key));
    return it == vars.end() ? nullptr : &it->second;
  });
}

}  // namespace factcheck::model

#include "factcheck/model/remote_backends.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>

#include "factcheck/model/mock_backends.hpp"
#include "factcheck/model/prompt.hpp"
#include "factcheck/text/utf8.hpp"

namespace factcheck::model {
namespace {

using nlohmann::json;

json ParseBody(const std::string& body, ErrorCode code) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw Error(code, std::string("malformed backend response: ") + e.what());
  }
}

}  // namespace

void BackendConfig::Validate() const {
  if (kind == BackendKind::kMock && !endpoint.empty()) {
    throw Error(ErrorCode::kInvalidInput, "mock backend takes no endpoint");
  }
  if (kind != BackendKind::kMock && endpoint.empty()) {
    throw Error(ErrorCode::kInvalidInput, "remote backend requires an endpoint");
  }
  if (timeout.count() <= 0) throw Error(ErrorCode::kInvalidInput, "timeout must be positive");
  if (max_retries < 0) throw Error(ErrorCode::kInvalidInput, "max_retries must be >= 0");
}

std::string_view StanceLabelName(StanceLabel label) {
  return label == StanceLabel::kSupports ? "SUPPORTS" : "REFUTES";
}

std::vector<EmbeddingVector> EmbedAll(const Embedder& embedder, std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); i += Embedder::kMaxBatch) {
    const std::size_t n = std::min(Embedder::kMaxBatch, texts.size() - i);
    auto batch = embedder.EmbedTexts(texts.subspan(i, n));
    std::move(batch.begin(), batch.end(), std::back_inserter(out));
  }
  return out;
}

RemoteClient::RemoteClient(BackendConfig config, std::shared_ptr<const Transport> transport,
                           RetryPolicy retry)
    : config_(std::move(config)),
      transport_(std::move(transport)),
      retry_(std::move(retry)),
      in_flight_(std::make_shared<Semaphore>(kDefaultInFlightPerEndpoint)) {
  config_.Validate();
  retry_.max_retries = config_.max_retries;
}

std::string RemoteClient::Post(const std::string& body) const {
  HttpRequest request;
  request.method = HttpRequest::Method::kPost;
  request.url = config_.endpoint;
  request.body = body;
  request.timeout = config_.timeout;
  SemaphoreGuard guard(*in_flight_);
  return SendWithRetries(*transport_, request, retry_);
}

std::vector<EmbeddingVector> RemoteEmbedder::EmbedTexts(std::span<const std::string> texts) const {
  if (texts.size() > kMaxBatch) {
    throw Error(ErrorCode::kInvalidInput, "embedding batch exceeds " + std::to_string(kMaxBatch));
  }
  json request = {{"texts", json::array()}};
  for (const auto& t : texts) {
    if (t.empty()) throw Error(ErrorCode::kInvalidInput, "cannot embed empty text");
    request["texts"].push_back(t);
  }
  if (!config().model_name.empty()) request["model"] = config().model_name;
  std::string body;
  try {
    body = Post(request.dump());
  } catch (const TransportError& e) {
    throw Error(ErrorCode::kEmbedderUnavailable, e.what());
  }
  const json response = ParseBody(body, ErrorCode::kEmbedderUnavailable);
  const auto& rows = response.at("embeddings");
  if (rows.size() != texts.size()) {
    throw Error(ErrorCode::kEmbedderUnavailable, "embedding count does not match request");
  }
  std::vector<EmbeddingVector> out;
  std::size_t dim = 0;
  for (const auto& row : rows) {
    auto values = row.get<std::vector<double>>();
    if (dim == 0) dim = values.size();
    if (values.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "ragged embeddings");
    out.push_back(MakeEmbedding(std::move(values)));
  }
  return out;
}

double RemoteTextScorer::ScoreText(ScoreTask, std::string_view input) const {
  const json request = {{"text", std::string(input)}};
  const json response = ParseBody(Post(request.dump()), ErrorCode::kBackendError);
  const double score = response.at("score").get<double>();
  return std::clamp(score, 0.0, 1.0);
}

PairScore RemotePairScorer::ScorePair(PairTask, std::string_view premise,
                                      std::string_view hypothesis) const {
  const json request = {{"premise", std::string(premise)}, {"hypothesis", std::string(hypothesis)}};
  const json response = ParseBody(Post(request.dump()), ErrorCode::kBackendError);
  const std::string label = text::ToLower(response.at("label").get<std::string>());
  PairScore out;
  if (label == "supports" || label == "entailment" || label == "support") {
    out.label = StanceLabel::kSupports;
  } else if (label == "refutes" || label == "contradiction" || label == "refute") {
    out.label = StanceLabel::kRefutes;
  } else {
    throw Error(ErrorCode::kBackendError, "unknown stance label: " + label);
  }
  out.confidence = std::clamp(response.at("score").get<double>(), 0.0, 1.0);
  return out;
}

std::string ChatGenerator::Generate(std::string_view prompt, int max_tokens) const {
  if (prompt.empty()) throw Error(ErrorCode::kInvalidInput, "empty prompt");
  const json request = {
      {"model", config().model_name},
      {"messages", json::array({{{"role", "user"}, {"content", std::string(prompt)}}})},
      {"max_tokens", max_tokens},
  };
  try {
    const json response = ParseBody(Post(request.dump()), ErrorCode::kGeneratorUnavailable);
    return response.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const TransportError& e) {
    throw Error(ErrorCode::kGeneratorUnavailable, e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kGeneratorUnavailable, e.what());
  }
}

LlmCheckworthyScorer::LlmCheckworthyScorer(std::shared_ptr<const Generator> generator)
    : generator_(std::move(generator)) {}

bool LlmCheckworthyScorer::ParseAnswer(std::string_view completion) {
  const std::string lower = text::ToLower(completion);
  const auto pos = lower.rfind("answer:");
  if (pos == std::string::npos) return false;
  const std::string_view rest = text::Trim(std::string_view(lower).substr(pos + 7));
  return rest.rfind("yes", 0) == 0;
}

double LlmCheckworthyScorer::ScoreText(ScoreTask, std::string_view input) const {
  static const PromptLibrary kLibrary;
  const std::string body = kLibrary.Render("checkworthy", {{"sentence", std::string(input)}});
  const std::string prompt = BuildPrompt("checkworthy", {{"payload", std::string(input)}}, body);
  try {
    return ParseAnswer(generator_->Generate(prompt, 256)) ? 1.0 : 0.0;
  } catch (const Error& e) {
    throw Error(ErrorCode::kBackendError, e.what());
  }
}

ModelGateway ModelGateway::Mock() {
  return {std::make_shared<MockEmbedder>(), std::make_shared<MockTextScorer>(),
          std::make_shared<MockPairScorer>(), std::make_shared<MockGenerator>()};
}

ModelGateway ModelGateway::FromEnvironment() {
  ModelGateway gateway = Mock();
  std::shared_ptr<const Transport> transport;
  if (const char* replay = std::getenv("FACTCHECK_REPLAY_DIR"); replay && *replay) {
    transport = std::make_shared<ReplayTransport>(replay);
  } else {
    transport = std::make_shared<HttpTransport>();
  }
  auto env = [](const char* name) -> std::string {
    const char* v = std::getenv(name);
    return v ? v : "";
  };
  if (auto url = env("FACTCHECK_GENERATOR_URL"); !url.empty()) {
    gateway.generator = std::make_shared<ChatGenerator>(
        BackendConfig{BackendKind::kChatGenerator, url, env("FACTCHECK_GENERATOR_MODEL")}, transport);
  }
  if (auto url = env("FACTCHECK_SCORER_URL"); !url.empty()) {
    gateway.scorer = std::make_shared<RemoteTextScorer>(
        BackendConfig{BackendKind::kRemoteScorer, url, "checkworthy"}, transport);
  }
  if (auto url = env("FACTCHECK_NLI_URL"); !url.empty()) {
    gateway.nli = std::make_shared<RemotePairScorer>(
        BackendConfig{BackendKind::kRemoteScorer, url, "nli"}, transport);
  }
  if (auto url = env("FACTCHECK_EMBEDDER_URL"); !url.empty()) {
    gateway.embedder = std::make_shared<RemoteEmbedder>(
        BackendConfig{BackendKind::kRemoteEmbedder, url, "embedder"}, transport);
  }
  return gateway;
}

}  // namespace factcheck::model

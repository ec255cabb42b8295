#pragma once

#include <memory>

#include "factcheck/concurrency.hpp"
#include "factcheck/model/backends.hpp"
#include "factcheck/model/transport.hpp"

// HTTP-backed capabilities. Wire formats:
//   scorer    POST {"text"}                          -> {"score"}
//   nli       POST {"premise","hypothesis"}          -> {"label","score"}
//   embedder  POST {"texts":[...]}                   -> {"embeddings":[[...]]}
//   generator POST {"model","messages","max_tokens"} -> {"choices":[{"message":{"content"}}]}
namespace factcheck::model {

constexpr std::size_t kDefaultInFlightPerEndpoint = 8;

class RemoteClient {
 public:
  RemoteClient(BackendConfig config, std::shared_ptr<const Transport> transport,
               RetryPolicy retry = {});

  const BackendConfig& config() const { return config_; }

 protected:
  std::string Post(const std::string& body) const;

 private:
  BackendConfig config_;
  std::shared_ptr<const Transport> transport_;
  RetryPolicy retry_;
  std::shared_ptr<Semaphore> in_flight_;
};

class RemoteEmbedder final : public Embedder, private RemoteClient {
 public:
  using RemoteClient::RemoteClient;
  std::vector<EmbeddingVector> EmbedTexts(std::span<const std::string> texts) const override;
};

class RemoteTextScorer final : public TextScorer, private RemoteClient {
 public:
  using RemoteClient::RemoteClient;
  double ScoreText(ScoreTask task, std::string_view text) const override;
};

class RemotePairScorer final : public PairScorer, private RemoteClient {
 public:
  using RemoteClient::RemoteClient;
  PairScore ScorePair(PairTask task, std::string_view premise,
                      std::string_view hypothesis) const override;
};

class ChatGenerator final : public Generator, private RemoteClient {
 public:
  using RemoteClient::RemoteClient;
  std::string Generate(std::string_view prompt, int max_tokens) const override;
};

// Check-worthiness via a generator and the two-shot chain-of-thought prompt;
// the score is 1 for a final "Answer: Yes", 0 otherwise.
class LlmCheckworthyScorer final : public TextScorer {
 public:
  explicit LlmCheckworthyScorer(std::shared_ptr<const Generator> generator);
  double ScoreText(ScoreTask task, std::string_view text) const override;

  static bool ParseAnswer(std::string_view completion);

 private:
  std::shared_ptr<const Generator> generator_;
};

}  // namespace factcheck::model

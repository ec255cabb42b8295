#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factcheck/model/embedding.hpp"

namespace factcheck::model {

enum class BackendKind { kMock, kRemoteScorer, kRemoteEmbedder, kChatGenerator };

struct BackendConfig {
  BackendKind kind = BackendKind::kMock;
  std::string endpoint;  // required iff kind != kMock
  std::string model_name;
  std::chrono::milliseconds timeout{30'000};
  int max_retries = 2;

  // Throws InvalidInput when the endpoint/kind pairing or timeout is invalid.
  void Validate() const;
};

enum class ScoreTask { kCheckworthy };
enum class PairTask { kStance };
enum class StanceLabel { kSupports, kRefutes };

std::string_view StanceLabelName(StanceLabel label);

struct PairScore {
  StanceLabel label = StanceLabel::kSupports;
  double confidence = 0.0;
};

class Embedder {
 public:
  static constexpr std::size_t kMaxBatch = 64;

  virtual ~Embedder() = default;
  // Order-preserving. Texts must be non-empty and at most kMaxBatch per call.
  // Throws EmbedderUnavailable on transport failure.
  virtual std::vector<EmbeddingVector> EmbedTexts(std::span<const std::string> texts) const = 0;
};

// Embeds an arbitrary number of texts in kMaxBatch chunks.
std::vector<EmbeddingVector> EmbedAll(const Embedder& embedder, std::span<const std::string> texts);

class TextScorer {
 public:
  virtual ~TextScorer() = default;
  // Returns a score in [0, 1]. Throws BackendError on transport failure.
  virtual double ScoreText(ScoreTask task, std::string_view text) const = 0;
};

class PairScorer {
 public:
  virtual ~PairScorer() = default;
  // premise is the evidence, hypothesis the claim.
  virtual PairScore ScorePair(PairTask task, std::string_view premise,
                              std::string_view hypothesis) const = 0;
};

class Generator {
 public:
  virtual ~Generator() = default;
  // Throws GeneratorUnavailable when the backend cannot be reached.
  virtual std::string Generate(std::string_view prompt, int max_tokens) const = 0;
};

// The set of capabilities the pipeline consumes. Backends are immutable
// after construction and shared across threads.
struct ModelGateway {
  std::shared_ptr<const Embedder> embedder;
  std::shared_ptr<const TextScorer> scorer;
  std::shared_ptr<const PairScorer> nli;
  std::shared_ptr<const Generator> generator;

  static ModelGateway Mock();

  // Reads FACTCHECK_{GENERATOR,SCORER,NLI,EMBEDDER}_URL and
  // FACTCHECK_GENERATOR_MODEL; unset capabilities use the mock backend.
  // FACTCHECK_REPLAY_DIR swaps the HTTP transport for recorded responses.
  static ModelGateway FromEnvironment();
};

}  // namespace factcheck::model

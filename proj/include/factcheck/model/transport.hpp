#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "factcheck/errors.hpp"

namespace factcheck::model {

struct HttpRequest {
  enum class Method { kGet, kPost };

  Method method = Method::kPost;
  std::string url;  // absolute, e.g. http://host:port/path?query
  std::string body;
  std::vector<std::pair<std::string, std::string>> headers;
  std::chrono::milliseconds timeout{30'000};
};

// Thrown for connection failures and non-2xx responses. Connection errors
// and 5xx/429 statuses are retryable.
class TransportError : public Error {
 public:
  TransportError(const std::string& message, bool retryable)
      : Error(ErrorCode::kBackendError, message), retryable_(retryable) {}

  bool retryable() const noexcept { return retryable_; }

 private:
  bool retryable_;
};

class Transport {
 public:
  virtual ~Transport() = default;
  // Returns the response body of a 2xx response.
  virtual std::string Send(const HttpRequest& request) const = 0;
};

class HttpTransport final : public Transport {
 public:
  std::string Send(const HttpRequest& request) const override;
};

// Serves recorded responses from `<dir>/<request_hash>.json`, where
// request_hash is ReplayKey(request). Missing recordings are non-retryable
// transport errors.
class ReplayTransport final : public Transport {
 public:
  explicit ReplayTransport(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::string Send(const HttpRequest& request) const override;

  // sha256 of the request body for POST, of the URL for GET.
  static std::string ReplayKey(const HttpRequest& request);

 private:
  std::filesystem::path dir_;
};

struct RetryPolicy {
  int max_retries = 2;
  std::chrono::milliseconds base_delay{250};
  // Injected so tests can observe backoff without sleeping.
  std::function<void(std::chrono::milliseconds)> sleep;

  std::chrono::milliseconds DelayFor(int attempt) const { return base_delay * (1 << attempt); }
};

// Calls send() up to 1 + max_retries times, backing off base_delay * 2^n
// between retryable failures. Rethrows the last error.
std::string SendWithRetries(const Transport& transport, const HttpRequest& request,
                            const RetryPolicy& policy);

// Splits "scheme://host[:port]/path?query" into ("scheme://host[:port]", "/path?query").
std::pair<std::string, std::string> SplitUrl(const std::string& url);

}  // namespace factcheck::model

#include "factcheck/model/transport.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <fstream>
#include <sstream>
#include <thread>

#include "factcheck/hash.hpp"

namespace factcheck::model {

std::pair<std::string, std::string> SplitUrl(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kInvalidInput, "not an absolute URL: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

std::string HttpTransport::Send(const HttpRequest& request) const {
  const auto [origin, path] = SplitUrl(request.url);
  httplib::Client client(origin);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(request.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(request.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());

  httplib::Headers headers;
  for (const auto& [k, v] : request.headers) headers.emplace(k, v);

  const httplib::Result result =
      request.method == HttpRequest::Method::kGet
          ? client.Get(path, headers)
          : client.Post(path, headers, request.body, "application/json");
  if (!result) {
    throw TransportError(request.url + ": " + httplib::to_string(result.error()), true);
  }
  if (result->status < 200 || result->status >= 300) {
    const bool retryable = result->status >= 500 || result->status == 429;
    throw TransportError(request.url + ": HTTP " + std::to_string(result->status), retryable);
  }
  return result->body;
}

std::string ReplayTransport::ReplayKey(const HttpRequest& request) {
  return Sha256Hex(request.method == HttpRequest::Method::kGet ? request.url : request.body);
}

std::string ReplayTransport::Send(const HttpRequest& request) const {
  const auto path = dir_ / (ReplayKey(request) + ".json");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TransportError("no recorded response " + path.string(), false);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string SendWithRetries(const Transport& transport, const HttpRequest& request,
                            const RetryPolicy& policy) {
  for (int attempt = 0;; ++attempt) {
    try {
      return transport.Send(request);
    } catch (const TransportError& e) {
      if (!e.retryable() || attempt >= policy.max_retries) throw;
    }
    const auto delay = policy.DelayFor(attempt);
    if (policy.sleep) {
      policy.sleep(delay);
    } else {
      std::this_thread::sleep_for(delay);
    }
  }
}

}  // namespace factcheck::model

#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "factcheck/service/service.hpp"

namespace factcheck::service {

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
};

// Routing without a socket, shared by the HTTP server and tests.
//   POST /api/v1/factcheck          {"text", "language"?} -> 202 {"job_id"}
//   GET  /api/v1/factcheck/{job_id} -> 200 job payload
//   GET  /api/v1/health             -> 200 {"status":"ok"}
// Errors are {"error": code, "message": text} with 400, 404, 405 or 413.
ApiResponse HandleApiRequest(FactCheckService& service, std::string_view method,
                             std::string_view path, std::string_view body);

class HttpApi {
 public:
  explicit HttpApi(FactCheckService& service);
  ~HttpApi();

  // Blocks until Stop(). Returns false if the socket could not be bound.
  bool Listen(const std::string& host, int port);
  // Binds to an ephemeral port and returns it, or -1.
  int BindToAnyPort(const std::string& host);
  // Serves on a socket bound by BindToAnyPort; blocks until Stop().
  bool ListenAfterBind();
  void WaitUntilReady() const;
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace factcheck::service

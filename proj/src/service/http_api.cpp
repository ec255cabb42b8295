#include "factcheck/service/http_api.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <spdlog/spdlog.h>

#include <json.hpp>

#include "factcheck/errors.hpp"
#include "factcheck/service/json_codec.hpp"

namespace factcheck::service {
namespace {

using nlohmann::json;

constexpr std::string_view kFactcheckPath = "/api/v1/factcheck";
constexpr std::string_view kHealthPath = "/api/v1/health";

ApiResponse ErrorResponse(int status, std::string_view code, std::string_view message) {
  return {status, json{{"error", code}, {"message", message}}.dump()};
}

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPayloadTooLarge: return 413;
    case ErrorCode::kNotFound: return 404;
    case ErrorCode::kEmptyText:
    case ErrorCode::kInvalidInput: return 400;
    default: return 500;
  }
}

ApiResponse Submit(FactCheckService& service, std::string_view body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error&) {
    return ErrorResponse(400, "InvalidInput", "body is not valid JSON");
  }
  if (!request.is_object() || !request.contains("text") || !request["text"].is_string()) {
    return ErrorResponse(400, "InvalidInput", "\"text\" must be a string");
  }
  std::optional<std::string> language;
  if (request.contains("language") && !request["language"].is_null()) {
    if (!request["language"].is_string()) {
      return ErrorResponse(400, "InvalidInput", "\"language\" must be a string");
    }
    language = request["language"].get<std::string>();
  }
  const std::string id = service.Submit(request["text"].get<std::string>(), std::move(language));
  return {202, json{{"job_id", id}}.dump()};
}

}  // namespace

ApiResponse HandleApiRequest(FactCheckService& service, std::string_view method,
                             std::string_view path, std::string_view body) {
  try {
    if (path == kHealthPath) {
      if (method != "GET") return ErrorResponse(405, "MethodNotAllowed", "use GET");
      return {200, R"({"status":"ok"})"};
    }
    if (path == kFactcheckPath) {
      if (method != "POST") return ErrorResponse(405, "MethodNotAllowed", "use POST");
      return Submit(service, body);
    }
    if (path.starts_with(kFactcheckPath) && path.size() > kFactcheckPath.size() + 1 &&
        path[kFactcheckPath.size()] == '/') {
      const std::string id(path.substr(kFactcheckPath.size() + 1));
      if (id.find('/') != std::string::npos) return ErrorResponse(404, "NotFound", "no such route");
      if (method != "GET") return ErrorResponse(405, "MethodNotAllowed", "use GET");
      return {200, JobToApiPayload(service.Get(id)).dump()};
    }
    return ErrorResponse(404, "NotFound", "no such route");
  } catch (const Error& e) {
    return ErrorResponse(HttpStatusFor(e.code()), ErrorCodeName(e.code()), e.what());
  } catch (const std::exception& e) {
    spdlog::error("request {} {} failed: {}", method, path, e.what());
    return ErrorResponse(500, "InternalError", e.what());
  }
}

struct HttpApi::Impl {
  explicit Impl(FactCheckService& s) : service(s) {}
  FactCheckService& service;
  httplib::Server server;
};

HttpApi::HttpApi(FactCheckService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  const auto route = [this](const httplib::Request& req, httplib::Response& res) {
    const ApiResponse out = HandleApiRequest(impl_->service, req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  server.Get(R"(/api/v1/.*)", route);
  server.Post(R"(/api/v1/.*)", route);
  server.Options(R"(/api/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
}

HttpApi::~HttpApi() { Stop(); }

bool HttpApi::Listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

int HttpApi::BindToAnyPort(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool HttpApi::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void HttpApi::WaitUntilReady() const { impl_->server.wait_until_ready(); }

void HttpApi::Stop() { impl_->server.stop(); }

}  // namespace factcheck::service

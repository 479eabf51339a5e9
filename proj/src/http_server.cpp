#include "depra/http_server.hpp"

#include "httplib.h"

namespace depra {

struct HttpServer::Impl {
  explicit Impl(ApiSession& s) : session(s) {}

  ApiSession& session;
  httplib::Server server;
};

HttpServer::HttpServer(ApiSession& session, std::string allowed_origin)
    : impl_(std::make_unique<Impl>(session)) {
  impl_->server.set_default_headers({
      {"Access-Control-Allow-Origin", allowed_origin},
      {"Access-Control-Allow-Methods", "GET, PUT, POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  impl_->server.set_pre_routing_handler([this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request{req.method, req.path, {}, req.body};
    for (const auto& [key, value] : req.params) request.query.emplace(key, value);
    const ApiResponse response = impl_->session.handle(request);
    res.status = response.status;
    if (!response.body.empty()) res.set_content(response.body, response.content_type);
    return httplib::Server::HandlerResponse::Handled;
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) fail(ErrorCode::io, "cannot bind to " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port))
    fail(ErrorCode::io, "cannot bind to " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace depra

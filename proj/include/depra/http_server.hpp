#pragma once

// HTTP/1.1 front end for an ApiSession. Every request, including CORS
// preflights, is answered by ApiSession::handle.

#include <memory>
#include <string>

#include "depra/api_session.hpp"

namespace depra {

class HttpServer {
 public:
  explicit HttpServer(ApiSession& session, std::string allowed_origin = "*");
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the listening socket; port 0 picks a free port. Returns the bound
  /// port. Throws Error(io) when binding fails.
  int bind(const std::string& host, int port);

  /// Serves until stop() is called.
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace depra

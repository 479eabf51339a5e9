#pragma once

// In-memory session behind the HTTP API. Requests are plain values so the
// routing and all status codes can be exercised without sockets.
//
// Reads take a shared lock; mutations take the exclusive lock and bump the
// revision. What-if requests copy a snapshot and compute outside the lock.

#include <cstdint>
#include <filesystem>
#include <map>
#include <shared_mutex>
#include <string>

#include "depra/error.hpp"
#include "depra/project.hpp"

namespace depra {

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// HTTP status for a failed request with the given error code.
int http_status_for(ErrorCode code);

class ApiSession {
 public:
  /// `file` is where POST /save writes; empty disables saving.
  explicit ApiSession(Project project, std::filesystem::path file = {});

  ApiResponse handle(const ApiRequest& request);

  std::uint64_t revision() const;
  bool dirty() const;
  Project snapshot() const;

 private:
  struct State {
    Project project;
    std::uint64_t revision = 0;
  };

  State read_state() const;

  ApiResponse get_project() const;
  ApiResponse get_rams(const std::string& alternative, int digits) const;
  ApiResponse get_alternative_dpn(const std::string& alternative, int digits) const;
  ApiResponse get_dpn(bool csv, int digits) const;
  ApiResponse get_conflicts(const ApiRequest& request, int digits) const;
  ApiResponse put_evaluation(const std::string& alternative, const std::string& property,
                             const std::string& body, int digits);
  ApiResponse put_properties(const std::string& body, int digits);
  ApiResponse post_whatif(const std::string& body, int digits) const;
  ApiResponse post_save(const std::string& body);

  mutable std::shared_mutex mutex_;
  Project project_;
  std::filesystem::path file_;
  std::uint64_t revision_ = 0;
  bool dirty_ = false;
};

}  // namespace depra

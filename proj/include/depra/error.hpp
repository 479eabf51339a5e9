#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace depra {

enum class ErrorCode {
  domain,      // argument outside the operation's domain
  structural,  // fault tree cannot be resolved or evaluated
  validation,  // model/project violates an invariant
  parse,       // malformed document text
  schema,      // well-formed document with missing or mistyped fields
  version,     // unsupported schema_version
  reference,   // dangling id
  missing,     // incomplete evaluations
  ambiguous,   // weight system admits more than one decomposition
  inconsistent,
  not_found,
  conflict,    // stale revision
  io,
  usage,
};

std::string_view code_name(ErrorCode code);

// Every failure raised by the library carries a machine-readable code; the
// CLI prints it as `error[<code>]: <message>`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace depra

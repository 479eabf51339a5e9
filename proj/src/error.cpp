#include "depra/error.hpp"

namespace depra {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return "domain";
    case ErrorCode::structural: return "structural";
    case ErrorCode::validation: return "validation";
    case ErrorCode::parse: return "parse";
    case ErrorCode::schema: return "schema";
    case ErrorCode::version: return "version";
    case ErrorCode::reference: return "reference";
    case ErrorCode::missing: return "missing";
    case ErrorCode::ambiguous: return "ambiguous";
    case ErrorCode::inconsistent: return "inconsistent";
    case ErrorCode::not_found: return "not_found";
    case ErrorCode::conflict: return "conflict";
    case ErrorCode::io: return "io";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

}  // namespace depra

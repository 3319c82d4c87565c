#include "fibcomp/error.hpp"

namespace fibcomp {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::parse_error: return "parse error";
    case ErrorCode::domain_error: return "domain error";
    case ErrorCode::unknown_name: return "unknown name";
    case ErrorCode::not_member: return "not a member";
    case ErrorCode::not_free: return "not free";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace fibcomp

#pragma once

#include <stdexcept>
#include <string>

namespace fibcomp {

enum class ErrorCode {
  invalid_argument = 1,
  parse_error,
  domain_error,
  unknown_name,
  not_member,
  not_free,
  internal,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them one-to-one onto its status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace fibcomp

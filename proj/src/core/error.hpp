#pragma once

#include <stdexcept>
#include <string>

namespace homcert {

enum class ErrorCode {
  invalid_input,
  not_bipartite,
  not_regular,
  budget_exceeded,
  cap_exceeded,
  generator_exhausted,
  invalid_config,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace homcert

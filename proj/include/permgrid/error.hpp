#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permgrid {

enum class ErrorCode {
  EmptySet,
  Arity,
  TooShort,
  Param,
  BadWord,
  Placement,
  NotFound,
  Parse,
  Plot,
};

/// Machine-readable name, e.g. "EMPTY_SET".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace permgrid

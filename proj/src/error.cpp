#include "permgrid/error.hpp"

namespace permgrid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySet: return "EMPTY_SET";
    case ErrorCode::Arity: return "ARITY";
    case ErrorCode::TooShort: return "TOO_SHORT";
    case ErrorCode::Param: return "PARAM";
    case ErrorCode::BadWord: return "BAD_WORD";
    case ErrorCode::Placement: return "PLACEMENT";
    case ErrorCode::NotFound: return "NOT_FOUND";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Plot: return "PLOT";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

}  // namespace permgrid

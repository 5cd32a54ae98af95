#include "core/error.hpp"

namespace homcert {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::not_bipartite: return "not_bipartite";
    case ErrorCode::not_regular: return "not_regular";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
    case ErrorCode::generator_exhausted: return "generator_exhausted";
    case ErrorCode::invalid_config: return "invalid_config";
  }
  return "unknown";
}

}  // namespace homcert

#include "hypmetric/error.hpp"

namespace hypmetric {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::metric: return "metric";
    case ErrorCode::guard: return "guard";
    case ErrorCode::empty_region: return "empty_region";
    case ErrorCode::not_quasi_geodesic: return "not_quasi_geodesic";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace hypmetric

#pragma once

#include <stdexcept>
#include <string>

namespace hypmetric {

enum class ErrorCode {
  invalid_argument = 1,
  parse,
  metric,
  guard,
  empty_region,
  not_quasi_geodesic,
  io,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypmetric

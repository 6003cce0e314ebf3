#ifndef QUENCH_ERROR_HPP
#define QUENCH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace quench {

enum class ErrorCode {
  InvalidGrid,
  InvalidParams,
  InvalidTime,
  CutoffTooSmall,
  UnsupportedLevel,
  UnsupportedEnsemble,
  QuadratureNonconvergence,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGrid: return "invalid-grid";
    case ErrorCode::InvalidParams: return "invalid-params";
    case ErrorCode::InvalidTime: return "invalid-time";
    case ErrorCode::CutoffTooSmall: return "cutoff-too-small";
    case ErrorCode::UnsupportedLevel: return "unsupported-level";
    case ErrorCode::UnsupportedEnsemble: return "unsupported-ensemble";
    case ErrorCode::QuadratureNonconvergence: return "quadrature-nonconvergence";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quench

#endif  // QUENCH_ERROR_HPP

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace casimir {

enum class ErrorCode {
  GapZero,
  DrudeAtZero,
  CMDenominatorNonpositive,
  BoundDenominatorNonpositive,
  DegenerateBracket,
  NonConvergent,
  PhiDenominatorZero,
  ZeroFreqUndefined,
  EpsAtMostOne,
  UnsupportedGeometry,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every numeric failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throws GapZero for d <= 0 with a message naming the divergence.
[[noreturn]] void throw_gap_zero(double d_nm);

}  // namespace casimir

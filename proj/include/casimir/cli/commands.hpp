#pragma once

#include <iosfwd>
#include <string>

#include "casimir/cli/config.hpp"
#include "casimir/quadrature.hpp"

namespace casimir::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // validate: at least one check failed
  kExitConfig = 2,       // usage or config parse error
  kExitNumeric = 3,      // engine error (GapZero, NonConvergent, ...)
};

inline constexpr const char* kCsvHeader = "variable,pressure_N_per_m2,est_error,tail_fraction";

/// Pressure of a run configuration, dispatching on the temperature method.
PressureResult evaluate(const RunConfig& config);

/// One CSV row with 17 significant digits; -0 prints as 0.
std::string csv_row(double variable, const PressureResult& r, bool magnitude);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli

#pragma once

#include <string>
#include <vector>

#include "casimir/configuration.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

namespace casimir {

enum class OracleScheme { Trapezoid, Simpson };

struct OracleSettings {
  int grid_kappa = 2048;
  int grid_k = 2048;
  // Cartesian cutoffs (1/nm). 0: 2 max(1 + 10 k_r,max + 1/d, 20/d).
  double kappa_max = 0.0;
  double k_max = 0.0;
  OracleScheme scheme = OracleScheme::Simpson;
  int threads = 0;
};

/// Slow reference: the pressure integral in Cartesian (kappa, k),
///   P = -(hbar c / 2 pi^2) int int kappa K0 (g_e + g_h) dkappa dk,
/// with composite Simpson (or trapezoid) panels on geometrically graded
/// segments and one Richardson step against the half grid. No closed-form
/// tail; the cutoffs are chosen so the remainder is below e^-80.
PressureResult pressure_bruteforce(const Configuration& config,
                                   const OracleSettings& oracle = {},
                                   const PhysicalConstants& constants = kCodata);

struct CheckResult {
  std::string name;
  bool passed{};
  double measured{};
  double tolerance{};
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::string text() const;
  std::string csv() const;
};

struct SuiteOptions {
  PhysicalConstants constants = kCodata;
  // Checks whose name contains this substring; empty runs every check.
  std::string filter;
  int threads = 0;
};

/// Names of every check in suite order.
std::vector<std::string> suite_check_names();

/// Runs the cross-module checks. Failures are report content, never thrown.
SuiteReport run_suite(const SuiteOptions& options = {});

}  // namespace casimir

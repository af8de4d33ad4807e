#pragma once

#include <vector>

#include "casimir/configuration.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

namespace casimir {

/// Handling of the n = 0 Matsubara term, where a bare Drude term has a pole.
enum class ZeroFrequencyMode {
  Static,      // eps(0) of every material; ZeroFreqUndefined on a Drude pole
  Omit,        // drop the n = 0 term
  DrudeLimit,  // eps -> infinity for materials with an unbound Drude term
};

std::string_view to_string(ZeroFrequencyMode mode);

/// Permittivity standing in for eps(0) = infinity in DrudeLimit mode.
inline constexpr double kDrudeLimitEps = 1e30;

/// Imaginary-axis wavenumbers k_n = 2 pi n k_B T / (hbar c) (1/nm),
/// n = 0..n_max, with n_max the smallest n such that 2 k_n d > cutoff.
struct MatsubaraGrid {
  Temperature T;
  std::vector<double> k;
  int n_max{};
};

MatsubaraGrid matsubara_grid(Temperature T, Length d, double cutoff = 40.0,
                             const PhysicalConstants& constants = kCodata);

/// (hbar omega / 2) coth(hbar omega / 2 k_B T) in J; omega in rad/s. Even in
/// omega; T = 0 gives hbar |omega| / 2 and omega = 0 gives k_B T.
double mean_oscillator_energy(double omega, Temperature T,
                              const PhysicalConstants& constants = kCodata);

/// int_0^inf x^2 (g_e + g_h)(kappa = x, k = 0) dx (1/nm^3): the n = 0
/// Matsubara integral. Zero in Omit mode.
double zero_frequency_integral(const Configuration& config, ZeroFrequencyMode mode);

/// Matsubara sum
///   P = -(k_B T / pi) sum'_n k_n^3 int_1^inf p^2 (g_e + g_h) dp,
/// the n = 0 term halved. est_error is the first omitted term with a
/// geometric remainder; tail_fraction is that bound over the total.
PressureResult pressure_finite_T(const Configuration& config, Temperature T,
                                 const QuadratureSettings& settings = {},
                                 ZeroFrequencyMode mode = ZeroFrequencyMode::Static,
                                 const PhysicalConstants& constants = kCodata);

/// Classical limit: the n = 0 term alone, -(k_B T / 2 pi) C0. Linear in T.
PressureResult pressure_high_T(const Configuration& config, Temperature T,
                               const QuadratureSettings& settings = {},
                               ZeroFrequencyMode mode = ZeroFrequencyMode::Static,
                               const PhysicalConstants& constants = kCodata);

/// First correction of coth(x) ~ 1 + 2 exp(-2x):
///   dP = -(hbar c / pi^2) int_0^inf k^3 exp(-k / k_T) int_1^inf p^2 (g_e + g_h) dp dk,
/// k_T = k_B T / (hbar c). Meaningful for k_B T << hbar c / d.
Pressure pressure_low_T_correction(const Configuration& config, Temperature T,
                                   const QuadratureSettings& settings = {},
                                   const PhysicalConstants& constants = kCodata);

}  // namespace casimir

#pragma once

#include <cstddef>
#include <vector>

#include "casimir/configuration.hpp"
#include "casimir/units.hpp"

namespace casimir {

struct QuadratureSettings {
  int n_theta = 600;    // nodes on (theta0, pi/2)
  int n_chi = 5000;     // radial nodes over all subdomains
  double theta0 = 1e-2; // small-angle split, rad
  int n_strip = 64;     // nodes on (0, theta0)
  // Radial subdomain edges (1/nm). Empty: {k_c} U {k_r} of the materials.
  std::vector<double> chi_subdomain_edges;
  // Radial cutoff (1/nm). 0: 1 + 10 k_r,max + 1/d, raised until the tail
  // estimate drops below rel_tol of the total.
  double chi_max = 0.0;
  double rel_tol = 1e-6;
  int threads = 0;  // 0: hardware concurrency
  // Evaluate a second grid with n_chi / 2 nodes for the error estimate and
  // the NonConvergent check.
  bool refinement_check = true;

  bool operator==(const QuadratureSettings&) const = default;
};

/// Throws InvalidArgument on n_theta < 8, n_chi < 64 or theta0 outside (0, pi/2).
void validate(const QuadratureSettings& settings);

struct PressureResult {
  Pressure pressure;
  double tail_fraction{};     // |tail / total|
  std::size_t evaluations{};  // integrand evaluations
  double est_error{};         // N/m^2
  double chi_max{};           // radial cutoff actually used, 1/nm
};

/// Default radial cutoff 1 + 10 k_r,max + 1/d (1/nm).
double chi_max_rule(const Configuration& config);

/// Zero-temperature pressure from the polar form of the pressure integral:
///
///   P = -(hbar c / 2 pi^2) int_0^{pi/2} cos(theta) dtheta
///                          int_0^inf chi^3 (g_e + g_h) dchi,
///
/// kappa = chi cos(theta), k = chi sin(theta). The angle range is split at
/// theta0; the radial range into subdomains at the material's spectral
/// edges with a closed-form exponential remainder beyond chi_max.
PressureResult pressure_zero_T(const Configuration& config,
                               const QuadratureSettings& settings = {},
                               const PhysicalConstants& constants = kCodata);

/// Same integral in the (p, k) variables, K0 = p k, kappa = k sqrt(p^2 - 1):
///   P = -(hbar c / 2 pi^2) int_0^inf k^3 dk int_1^inf p^2 (g_e + g_h) dp.
PressureResult pressure_p_k_form(const Configuration& config,
                                 const QuadratureSettings& settings = {},
                                 const PhysicalConstants& constants = kCodata);

/// int_{chi0}^inf chi^2 exp(-2 chi d) (1/phi_e + 1/phi_h) dchi with phi
/// held constant:
///   exp(-2 d chi0) (1/phi_e + 1/phi_h) (chi0^2/2d + chi0/2d^2 + 1/4d^3).
double tail_closed_form(double chi0, Length d, double phi_e, double phi_h);

/// The chi^3 moment matching the polar integrand:
///   exp(-2 d chi0) (1/phi_e + 1/phi_h)
///     (chi0^3/2d + 3 chi0^2/4d^2 + 3 chi0/4d^3 + 3/8d^4).
double tail_closed_form_cubic(double chi0, Length d, double phi_e, double phi_h);

struct PhiLimits {
  double phi_e{};
  double phi_h{};
};

/// Chi-independent bracket values of the small-angle strip at large chi,
/// built from K ~ chi sqrt(1 + eps(0)). Throws PhiDenominatorZero when
/// |1 + eps0 - eps0^2| < 1e-6 and InvalidArgument for eps0 <= 1.
PhiLimits phi_limits_small_angle(double eps0);

/// int_1^inf p^2 (g_e + g_h)(kappa = k sqrt(p^2 - 1), k) dp at fixed k > 0,
/// with the permittivities given. `evaluations` is incremented per node.
double p_integral(const Configuration& config, double k, double eps_plate,
                  double eps_gap, std::size_t* evaluations = nullptr);

}  // namespace casimir

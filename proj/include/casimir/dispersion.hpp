#pragma once

#include "casimir/configuration.hpp"
#include "casimir/units.hpp"

namespace casimir {

// Characteristic (plasmon-polariton dispersion) functions f_e, f_h on the
// imaginary axis. Only the inverses g = 1/f enter the pressure integral, so
// only inverses are exposed. They are formed as
//
//   g = r exp(-2 X d) / (1 - r exp(-2 X d)),   r = 1 / phi <= 1,
//
// where phi is the squared bracket of the characteristic function and X the
// wavenumber in the gap exponent. exp(+2 X d) is never formed.

/// Transverse wavenumber kappa and imaginary-frequency wavenumber k (1/nm).
struct AxisPoint {
  double kappa{};
  double k{};

  double K0() const;
  /// sqrt(kappa^2 + k^2 eps); K(1) == K0() bit for bit.
  double K(double eps) const;
};

struct InverseCharValue {
  double g_e{};
  double g_h{};
  double sum() const { return g_e + g_h; }
};

/// Reflection factors r = 1/phi of both polarizations and the exponent X.
struct GapReflection {
  double r_e{};
  double r_h{};
  double exponent{};  // X in exp(-2 X d), 1/nm
};

InverseCharValue inverse_from_reflection(const GapReflection& r, Length d);

/// Equal plates of thickness t in vacuum.
InverseCharValue inv_f_slabs(const AxisPoint& p, Length d, Length t, double eps);

/// Semi-infinite plates (t -> infinity).
InverseCharValue inv_f_halfspace(const AxisPoint& p, Length d, double eps);

enum class ThinPlateEMode {
  Squared,    // t^2 (K^2 - eps^2 K0^2)^2 / (4 eps^2 K0^2) e^{-2 K0 d}
  AsPrinted,  // the unsquared bracket; negative for eps > 1
};

/// Leading small-t asymptote; valid for K t << 1 (not checked).
InverseCharValue inv_f_thin_plate(const AxisPoint& p, Length d, Length t,
                                  double eps,
                                  ThinPlateEMode mode = ThinPlateEMode::Squared);

/// Plates of thickness t >= 0 with a gap of permittivity eps_gap; t = 0 is
/// the freestanding film of permittivity eps_gap and thickness d.
InverseCharValue inv_f_filled_gap(const AxisPoint& p, Length d, Length t,
                                  double eps, double eps_gap);

/// Freestanding sheets of normalized conductivity zeta >= 0, driven by the
/// vacuum impedances rho0_e, rho0_h.
InverseCharValue inv_f_sheet(const AxisPoint& p, Length d, double zeta);

struct Impedances {
  double rho_e{};
  double rho_h{};
  double rho0_e{};
  double rho0_h{};
};

/// rho_e = K/(k eps), rho_h = k/K, rho0_e = K0/k, rho0_h = k/K0. Needs k > 0.
Impedances impedance_rho(const AxisPoint& p, double eps);

/// 1/fbar = 1/f~(d) - 1/f~(inf) of the transformed-impedance equation,
/// before normalization.
InverseCharValue inv_f_bar_impedance(const AxisPoint& p, Length d, double eps);

/// Impedance route normalized to match the half-space functions.
InverseCharValue inv_f_impedance(const AxisPoint& p, Length d, double eps);

/// Reflection factors of a geometry with explicit permittivities of the
/// plates and of the gap medium.
GapReflection reflection(const Geometry& geometry, const AxisPoint& p,
                         double eps_plate, double eps_gap);

/// Reflection factors with permittivities taken from the configuration's
/// materials at p.k.
GapReflection reflection(const Configuration& config, const AxisPoint& p);

/// Integrand factor g_e + g_h of a configuration at p.
InverseCharValue inv_f(const Configuration& config, const AxisPoint& p);

/// Whether the plate material enters the integrand of a geometry.
bool uses_plate_material(const Geometry& geometry);

/// Material filling the gap, or nullptr for a vacuum gap.
const Material* gap_material(const Configuration& config);

/// Permittivity of the gap medium (1 for a vacuum gap) at k.
double gap_permittivity(const Configuration& config, double k);

/// Plate and gap permittivities of a configuration at k; 1 where a medium
/// does not enter the geometry.
struct AxisPermittivity {
  double plate{1.0};
  double gap{1.0};
};

AxisPermittivity permittivities(const Configuration& config, double k);

}  // namespace casimir

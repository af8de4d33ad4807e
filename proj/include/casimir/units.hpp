#pragma once

#include <compare>

namespace casimir {

// Internal unit conventions: lengths in nm, wavenumbers in 1/nm.
// Conversion to SI happens only in the pressure prefactors.

inline constexpr double kMetresPerNm = 1e-9;
inline constexpr double kNmPerMetre = 1e9;

struct PhysicalConstants {
  double hbar;  // J s
  double c;     // m / s
  double k_B;   // J / K

  double hbar_c() const { return hbar * c; }
  bool operator==(const PhysicalConstants&) const = default;
};

/// CODATA 2018 exact/recommended values.
inline constexpr PhysicalConstants kCodata{1.054571817e-34, 299792458.0,
                                           1.380649e-23};

struct Length {
  double value{};  // nm
  auto operator<=>(const Length&) const = default;
};

struct WaveNumber {
  double value{};  // 1/nm
  auto operator<=>(const WaveNumber&) const = default;
};

/// Force per area in N/m^2; negative is attraction.
struct Pressure {
  double value{};
  auto operator<=>(const Pressure&) const = default;
};

struct Temperature {
  double value{};  // K
  auto operator<=>(const Temperature&) const = default;
};

inline constexpr double per_nm_to_per_metre(double k) { return k * kNmPerMetre; }
inline constexpr double per_metre_to_per_nm(double k) { return k / kNmPerMetre; }

/// hbar c / (2 pi^2) scaled so that an integral in nm^-4 yields N/m^2.
/// The gap is accepted for symmetry with the other pressure entry points;
/// the prefactor itself carries no d.
double unit_pressure_prefactor(Length d,
                               const PhysicalConstants& constants = kCodata);

/// Thermal wavenumber k_B T / (hbar c) in 1/nm.
double thermal_wavenumber(Temperature T,
                          const PhysicalConstants& constants = kCodata);

}  // namespace casimir

#pragma once

#include <optional>
#include <string>

#include "casimir/permittivity.hpp"
#include "casimir/units.hpp"

namespace casimir {

enum class Regime { IdealCasimir, ThinPlasmaFilm, LargeDDielectric, SmallDLifshitz };

std::string_view to_string(Regime regime);

struct RegimeEstimate {
  Pressure pressure;
  Regime regime{};
  std::string validity_note;
};

/// -pi^2 hbar c / (240 d^4).
Pressure casimir_ideal(Length d, const PhysicalConstants& constants = kCodata);

/// -pi^2 hbar c / (1920 d^4), the d k_max -> 0 limit of a plasma film.
Pressure thin_plasma_film(Length d, const PhysicalConstants& constants = kCodata);

/// Dielectric half-spaces with eps frozen at eps0:
///   P = -(3 hbar c / 8 pi^2 d^4) ((1 - sqrt(eps0)) / (1 + sqrt(eps0)))^2.
/// The note compares d with 1/k_r,max when the highest resonance is given.
RegimeEstimate large_d_dielectric(double eps0, Length d,
                                  std::optional<double> k_r_max = std::nullopt,
                                  const PhysicalConstants& constants = kCodata);

/// Non-retarded 1/d^3 estimate for half-spaces of `material`, keeping the
/// first two terms of the reflection series with the closed-form x-integral:
///   P = -(hbar c / 16 pi^2 d^3) int dk D^2 [e^{-a}(a^2 + 2a + 2)
///                                          + e^{-2a}(a^2/2 + a/2 + 1/4) D^2],
/// a = 2 k d, D = (1 - eps(k)) / (1 + eps(k)).
Pressure small_d_lifshitz(const Material& material, Length d,
                          const PhysicalConstants& constants = kCodata);

}  // namespace casimir

#pragma once

#include <optional>
#include <vector>

#include "casimir/units.hpp"

namespace casimir {

// Permittivity on the imaginary-frequency axis, omega = -i c k with k >= 0
// real. Every quantity here is real and evaluation never touches complex
// arithmetic.

/// Lorentz oscillator k_p^2 / (k_r^2 + k^2 + k_c k), all wavenumbers in 1/nm.
/// A free-carrier (Drude) term is an oscillator with k_r = 0.
struct OscillatorTerm {
  double k_p{};
  double k_r{};
  double k_c{};
  bool operator==(const OscillatorTerm&) const = default;
};

enum class PermittivityModel {
  SmallDensity,      // eps = 1 + sum
  ClausiusMossotti,  // eps = (1 + 2/3 sum) / (1 - 1/3 sum)
};

struct Material {
  std::vector<OscillatorTerm> bound_terms;
  std::optional<OscillatorTerm> drude;  // k_r ignored
  // Binding wavenumber k_s of the free-carrier term. When present the term
  // becomes k_p^2 / (k_s^2 + k^2 - k_c k) and is finite at k = 0.
  std::optional<double> drude_binding;
  PermittivityModel model = PermittivityModel::SmallDensity;

  bool is_vacuum() const { return bound_terms.empty() && !drude; }
  bool has_unbound_drude() const { return drude && !drude_binding; }

  /// Largest resonance wavenumber, 0 when there is none.
  double max_resonance() const;

  /// Sorted, unique positive k_c and k_r values; the radial subdomain edges.
  std::vector<double> spectral_edges() const;

  bool operator==(const Material&) const = default;
};

Material vacuum_material();

/// Six Lorentz terms k_p = 0.05, k_r = {0.01, 0.02, 0.03, 0.04, 0.05, 0.08},
/// k_c = 1e-6 (1/nm). With `with_drude` a free-carrier term k_p = 0.05,
/// k_c = 1e-6 is added (unbound).
Material default_material(bool with_drude = false);

/// Single Lorentz term with the given static permittivity and resonance.
Material single_oscillator(double eps_static, double k_r, double k_c = 0.0);

/// Throws InvalidArgument on negative parameters or a malformed free-carrier term.
void check_material(const Material& material);

/// Total susceptibility at k (the sum entering both permittivity models).
double susceptibility(const Material& material, double k);

double eps_imag_axis(const Material& material, double k);
double eps_imag_axis(const Material& material, WaveNumber k);

/// Low-frequency limit 1 + sum k_p^2 / k_r^2 (plus k_p^2 / k_s^2 if bound).
double eps_static(const Material& material);

/// Bound free-carrier susceptibility k_p^2 / (k_s^2 + k^2 - k_c k).
double chi_drude_bound(const OscillatorTerm& term, double k_s, double k);

}  // namespace casimir

#include "casimir/permittivity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

namespace {

double lorentz(const OscillatorTerm& t, double k) {
  const double denom = t.k_r * t.k_r + k * k + t.k_c * k;
  if (denom <= 0.0) {
    std::ostringstream os;
    os << "oscillator with k_r = 0 evaluated at k = " << k
       << " (pole at k = 0)";
    throw Error(ErrorCode::DrudeAtZero, os.str());
  }
  return t.k_p * t.k_p / denom;
}

}  // namespace

double Material::max_resonance() const {
  double m = 0.0;
  for (const auto& t : bound_terms) m = std::max(m, t.k_r);
  return m;
}

std::vector<double> Material::spectral_edges() const {
  std::vector<double> edges;
  for (const auto& t : bound_terms) {
    if (t.k_c > 0) edges.push_back(t.k_c);
    if (t.k_r > 0) edges.push_back(t.k_r);
  }
  if (drude && drude->k_c > 0) edges.push_back(drude->k_c);
  if (drude_binding && *drude_binding > 0) edges.push_back(*drude_binding);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Material vacuum_material() { return Material{}; }

Material default_material(bool with_drude) {
  Material m;
  for (double k_r : {0.01, 0.02, 0.03, 0.04, 0.05, 0.08})
    m.bound_terms.push_back({0.05, k_r, 1e-6});
  if (with_drude) m.drude = OscillatorTerm{0.05, 0.0, 1e-6};
  return m;
}

Material single_oscillator(double eps_static, double k_r, double k_c) {
  if (eps_static < 1.0 || k_r <= 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "single_oscillator needs eps_static >= 1 and k_r > 0");
  Material m;
  m.bound_terms.push_back({k_r * std::sqrt(eps_static - 1.0), k_r, k_c});
  return m;
}

void check_material(const Material& material) {
  auto bad = [](const OscillatorTerm& t) {
    return !(t.k_p >= 0.0) || !(t.k_r >= 0.0) || !(t.k_c >= 0.0);
  };
  for (const auto& t : material.bound_terms)
    if (bad(t))
      throw Error(ErrorCode::InvalidArgument,
                  "oscillator parameters must be non-negative");
  if (material.drude) {
    if (bad(*material.drude))
      throw Error(ErrorCode::InvalidArgument,
                  "free-carrier parameters must be non-negative");
    if (material.drude->k_r != 0.0)
      throw Error(ErrorCode::InvalidArgument,
                  "free-carrier term must have k_r = 0");
  }
  if (material.drude_binding && !(*material.drude_binding > 0.0))
    throw Error(ErrorCode::InvalidArgument, "binding wavenumber k_s must be > 0");
  if (material.drude_binding && !material.drude)
    throw Error(ErrorCode::InvalidArgument,
                "binding wavenumber given without a free-carrier term");
}

double chi_drude_bound(const OscillatorTerm& term, double k_s, double k) {
  if (!(k_s > 0.0))
    throw Error(ErrorCode::InvalidArgument, "k_s must be > 0");
  const double denom = k_s * k_s + k * k - term.k_c * k;
  if (denom <= 0.0) {
    std::ostringstream os;
    os << "k_s^2 + k^2 - k_c k = " << denom << " at k = " << k;
    throw Error(ErrorCode::BoundDenominatorNonpositive, os.str());
  }
  return term.k_p * term.k_p / denom;
}

double susceptibility(const Material& material, double k) {
  if (k < 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "permittivity is defined for k >= 0 on the imaginary axis");
  double sum = 0.0;
  for (const auto& t : material.bound_terms) sum += lorentz(t, k);
  if (material.drude) {
    if (material.drude_binding)
      sum += chi_drude_bound(*material.drude, *material.drude_binding, k);
    else
      sum += lorentz(OscillatorTerm{material.drude->k_p, 0.0, material.drude->k_c}, k);
  }
  return sum;
}

double eps_imag_axis(const Material& material, double k) {
  const double s = susceptibility(material, k);
  switch (material.model) {
    case PermittivityModel::SmallDensity:
      return 1.0 + s;
    case PermittivityModel::ClausiusMossotti: {
      const double denom = 1.0 - s / 3.0;
      if (denom <= 0.0) {
        std::ostringstream os;
        os << "Clausius-Mossotti sum reaches " << s << " >= 3 at k = " << k;
        throw Error(ErrorCode::CMDenominatorNonpositive, os.str());
      }
      return (1.0 + 2.0 * s / 3.0) / denom;
    }
  }
  return 1.0 + s;
}

double eps_imag_axis(const Material& material, WaveNumber k) {
  return eps_imag_axis(material, k.value);
}

double eps_static(const Material& material) {
  if (material.has_unbound_drude())
    throw Error(ErrorCode::DrudeAtZero,
                "static permittivity of an unbound free-carrier term is infinite");
  return eps_imag_axis(material, 0.0);
}

}  // namespace casimir

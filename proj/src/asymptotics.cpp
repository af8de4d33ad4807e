#include "casimir/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/detail/gauss_rule.hpp"
#include "casimir/error.hpp"

namespace casimir {

namespace {

constexpr double kPerNm4 = 1e36;  // 1/nm^4 -> 1/m^4

void check_gap(Length d) {
  if (!(d.value > 0.0)) throw_gap_zero(d.value);
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::IdealCasimir: return "ideal_casimir";
    case Regime::ThinPlasmaFilm: return "thin_plasma_film";
    case Regime::LargeDDielectric: return "large_d_dielectric";
    case Regime::SmallDLifshitz: return "small_d_lifshitz";
  }
  return "unknown";
}

Pressure casimir_ideal(Length d, const PhysicalConstants& constants) {
  check_gap(d);
  const double d4 = std::pow(d.value, 4);
  return Pressure{-std::numbers::pi * std::numbers::pi * constants.hbar_c() * kPerNm4 /
                  (240.0 * d4)};
}

Pressure thin_plasma_film(Length d, const PhysicalConstants& constants) {
  return Pressure{casimir_ideal(d, constants).value / 8.0};
}

RegimeEstimate large_d_dielectric(double eps0, Length d, std::optional<double> k_r_max,
                                  const PhysicalConstants& constants) {
  check_gap(d);
  if (!(eps0 > 1.0))
    throw Error(ErrorCode::EpsAtMostOne, "large_d_dielectric needs eps0 > 1");
  const double root = std::sqrt(eps0);
  const double bracket = (1.0 - root) / (1.0 + root);
  const double d4 = std::pow(d.value, 4);
  RegimeEstimate out;
  out.regime = Regime::LargeDDielectric;
  out.pressure = Pressure{-3.0 * constants.hbar_c() * kPerNm4 /
                          (8.0 * std::numbers::pi * std::numbers::pi * d4) * bracket * bracket};
  std::ostringstream note;
  if (k_r_max && *k_r_max > 0.0) {
    const double scale = 1.0 / *k_r_max;
    note << "d = " << d.value << " nm vs 1/k_r,max = " << scale << " nm; "
         << (d.value > 5.0 * scale ? "within" : "outside")
         << " the frozen-eps(0) regime (needs d >> 1/k_r,max)";
  } else {
    note << "eps frozen at eps(0); valid once d exceeds every resonance length 1/k_r";
  }
  out.validity_note = note.str();
  return out;
}

Pressure small_d_lifshitz(const Material& material, Length d,
                          const PhysicalConstants& constants) {
  check_gap(d);
  check_material(material);
  (void)eps_static(material);  // needs a finite eps(0)
  if (material.is_vacuum()) return Pressure{0.0};

  const double dn = d.value;
  const double upper = 60.0 / dn + 10.0 * material.max_resonance();
  std::vector<double> edges = material.spectral_edges();
  for (double f : {1e-4, 1e-2, 0.1, 1.0, 10.0}) edges.push_back(f / dn);
  std::erase_if(edges, [upper](double e) { return !(e > 0.0) || e >= upper; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  const detail::QuadratureRule rule = detail::graded_rule(edges, upper, 4096);
  const double integral = rule.integrate([&](double k) {
    const double eps = eps_imag_axis(material, k);
    const double D2 = std::pow((1.0 - eps) / (1.0 + eps), 2);
    const double a = 2.0 * k * dn;
    return D2 * (std::exp(-a) * (a * a + 2.0 * a + 2.0) +
                 std::exp(-2.0 * a) * (0.5 * a * a + 0.5 * a + 0.25) * D2);
  });
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return Pressure{-constants.hbar_c() * kPerNm4 / (16.0 * pi2 * dn * dn * dn) * integral + 0.0};
}

}  // namespace casimir

#include "casimir/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "casimir/detail/gauss_rule.hpp"
#include "casimir/detail/parallel.hpp"
#include "casimir/dispersion.hpp"
#include "casimir/error.hpp"
#include "casimir/permittivity.hpp"

namespace casimir {

namespace {

constexpr double kJoulePerNm3 = 1e27;  // J/nm^3 -> N/m^2

void require_positive(Temperature T) {
  if (!(T.value > 0.0))
    throw Error(ErrorCode::InvalidArgument, "temperature must be > 0 K");
}

double zero_frequency_eps(const Material& m, ZeroFrequencyMode mode) {
  if (!m.has_unbound_drude()) return eps_static(m);
  if (mode == ZeroFrequencyMode::DrudeLimit) return kDrudeLimitEps;
  throw Error(ErrorCode::ZeroFreqUndefined,
              "eps(0) has a Drude pole; choose zero_frequency = omit or drude_limit");
}

std::vector<double> sorted_edges(std::vector<double> edges, double b) {
  std::erase_if(edges, [b](double e) { return !(e > 0.0) || e >= b; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

double matsubara_term(const Configuration& config, double k) {
  const AxisPermittivity eps = permittivities(config, k);
  return k * k * k * p_integral(config, k, eps.plate, eps.gap);
}

}  // namespace

std::string_view to_string(ZeroFrequencyMode mode) {
  switch (mode) {
    case ZeroFrequencyMode::Static: return "static";
    case ZeroFrequencyMode::Omit: return "omit";
    case ZeroFrequencyMode::DrudeLimit: return "drude_limit";
  }
  return "unknown";
}

MatsubaraGrid matsubara_grid(Temperature T, Length d, double cutoff,
                             const PhysicalConstants& constants) {
  require_positive(T);
  if (!(d.value > 0.0)) throw_gap_zero(d.value);
  const double k1 = 2.0 * std::numbers::pi * thermal_wavenumber(T, constants);
  MatsubaraGrid grid;
  grid.T = T;
  grid.n_max = static_cast<int>(std::floor(cutoff / (2.0 * k1 * d.value))) + 1;
  grid.k.reserve(static_cast<std::size_t>(grid.n_max) + 1);
  for (int n = 0; n <= grid.n_max; ++n) grid.k.push_back(n * k1);
  return grid;
}

double mean_oscillator_energy(double omega, Temperature T, const PhysicalConstants& constants) {
  if (T.value < 0.0) throw Error(ErrorCode::InvalidArgument, "temperature must be >= 0 K");
  const double half = 0.5 * constants.hbar * std::abs(omega);
  if (T.value == 0.0) return half;
  const double kT = constants.k_B * T.value;
  if (omega == 0.0) return kT;
  return half / std::tanh(half / kT);
}

double zero_frequency_integral(const Configuration& config, ZeroFrequencyMode mode) {
  validate(config);
  if (mode == ZeroFrequencyMode::Omit) return 0.0;
  const double eps_plate = uses_plate_material(config.geometry)
                               ? zero_frequency_eps(config.plate_material, mode)
                               : 1.0;
  const Material* gm = gap_material(config);
  const double eps_gap = gm != nullptr ? zero_frequency_eps(*gm, mode) : 1.0;

  const double d = config.gap.value;
  const double upper = 60.0 / d;
  std::vector<double> edges{1e-4 / d, 1e-2 / d, 0.1 / d, 1.0 / d, 10.0 / d};
  const detail::QuadratureRule rule = detail::graded_rule(sorted_edges(edges, upper), upper, 1024);
  return rule.integrate([&](double x) {
    const GapReflection r = reflection(config.geometry, AxisPoint{x, 0.0}, eps_plate, eps_gap);
    return x * x * inverse_from_reflection(r, config.gap).sum();
  });
}

PressureResult pressure_finite_T(const Configuration& config, Temperature T,
                                 const QuadratureSettings& settings, ZeroFrequencyMode mode,
                                 const PhysicalConstants& constants) {
  validate(config);
  validate(settings);
  require_positive(T);
  const MatsubaraGrid grid = matsubara_grid(T, config.gap, 40.0, constants);
  const double c0 = zero_frequency_integral(config, mode);

  const std::size_t n = grid.k.size();
  const auto terms = detail::parallel_map(n - 1, settings.threads, [&](std::size_t i) {
    return matsubara_term(config, grid.k[i + 1]);
  });
  const double sum = 0.5 * c0 + detail::ordered_sum(terms);

  const double k1 = grid.k[1];
  const double omitted = matsubara_term(config, (grid.n_max + 1) * k1);
  const double remainder = omitted / (1.0 - std::exp(-2.0 * k1 * config.gap.value));

  const double scale = constants.k_B * T.value / std::numbers::pi * kJoulePerNm3;
  PressureResult out;
  out.pressure = Pressure{-scale * sum + 0.0};
  out.est_error = scale * remainder;
  out.tail_fraction = sum == 0.0 ? 0.0 : remainder / sum;
  out.evaluations = n;
  return out;
}

PressureResult pressure_high_T(const Configuration& config, Temperature T,
                               const QuadratureSettings& settings, ZeroFrequencyMode mode,
                               const PhysicalConstants& constants) {
  validate(settings);
  require_positive(T);
  const double c0 = zero_frequency_integral(config, mode);
  const double rest = c0 / (2.0 * std::numbers::pi) * kJoulePerNm3;
  PressureResult out;
  out.pressure = Pressure{-(constants.k_B * T.value) * rest + 0.0};
  out.evaluations = 1;
  return out;
}

Pressure pressure_low_T_correction(const Configuration& config, Temperature T,
                                   const QuadratureSettings& settings,
                                   const PhysicalConstants& constants) {
  validate(config);
  validate(settings);
  if (T.value < 0.0) throw Error(ErrorCode::InvalidArgument, "temperature must be >= 0 K");
  if (T.value == 0.0) return Pressure{0.0};
  const double d = config.gap.value;
  const double kT = thermal_wavenumber(T, constants);
  const double upper = 50.0 / (1.0 / kT + 2.0 * d);

  std::vector<double> edges = spectral_edges(config);
  for (double f : {1e-3, 1e-2, 0.1, 1.0, 10.0}) edges.push_back(f * kT);
  for (double f : {1e-4, 0.1, 1.0, 10.0}) edges.push_back(f / d);
  const detail::QuadratureRule rule =
      detail::graded_rule(sorted_edges(edges, upper), upper, settings.n_chi);

  const auto values = detail::parallel_map(rule.size(), settings.threads, [&](std::size_t i) {
    const double k = rule.nodes[i];
    return rule.weights[i] * std::exp(-k / kT) * matsubara_term(config, k);
  });
  const double integral = detail::ordered_sum(values);
  const double scale = constants.hbar_c() / (std::numbers::pi * std::numbers::pi) * 1e36;
  return Pressure{-scale * integral + 0.0};
}

}  // namespace casimir

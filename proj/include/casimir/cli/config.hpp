#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/configuration.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/thermal.hpp"

namespace casimir::cli {

// Run configuration file grammar (line oriented, '#' or ';' starts a comment):
//
//   [material]            name, model = small_density | clausius_mossotti,
//                         preset = vacuum | default | default_drude
//   [oscillator]          k_p, k_r, k_c            (appends to last material)
//   [drude]               k_p, k_c, k_s = auto | <value>
//   [geometry]            type = ideal | slabs | halfspaces | filled_gap | film | sheets,
//                         d, t, t1, t2, zeta, material, gap_material
//   [temperature]         T, method = zero | matsubara | high_t | low_t,
//                         zero_frequency = static | omit | drude_limit
//   [quadrature]          n_theta, n_chi, n_strip, theta0, rel_tol, chi_max, threads
//   [sweep]               variable = d | t | T, start, stop, points,
//                         spacing = linear | log, output
//
// Wavenumbers are in 1/nm, lengths in nm, temperatures in K.

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct NamedMaterial {
  std::string name;
  Material material;

  bool operator==(const NamedMaterial&) const = default;
};

enum class GeometryType { Ideal, Slabs, HalfSpaces, FilledGap, Film, Sheets };

struct GeometrySpec {
  GeometryType type = GeometryType::HalfSpaces;
  double d = 10.0;
  double t1 = 0.0;  // slab thicknesses; "t" sets both, filled_gap uses t1
  double t2 = 0.0;
  double zeta = 0.0;
  std::string material;      // plate material; empty: first block
  std::string gap_material;  // filled_gap gap medium / film material

  bool operator==(const GeometrySpec&) const = default;
};

enum class ThermalMethod { Zero, Matsubara, HighT, LowT };

struct TemperatureSpec {
  double T = 0.0;
  ThermalMethod method = ThermalMethod::Zero;
  ZeroFrequencyMode zero_frequency = ZeroFrequencyMode::Static;

  bool operator==(const TemperatureSpec&) const = default;
};

enum class SweepVariable { Distance, Thickness, Temperature };

struct SweepSpec {
  SweepVariable variable = SweepVariable::Distance;
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  bool log_spacing = false;
  std::string output;  // empty: stdout

  bool operator==(const SweepSpec&) const = default;
};

struct RunConfig {
  std::vector<NamedMaterial> materials;
  GeometrySpec geometry;
  std::optional<TemperatureSpec> temperature;
  QuadratureSettings quadrature;
  std::optional<SweepSpec> sweep;

  bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Canonical text form; parse_config(dump_config(c)) reproduces c.
std::string dump_config(const RunConfig& config);

/// Physical configuration described by the geometry block. Throws
/// ConfigError when a referenced material is missing.
Configuration build_configuration(const RunConfig& config);

/// Sweep abscissae in order.
std::vector<double> sweep_values(const SweepSpec& sweep);

/// Copy of `config` with the sweep variable set to `value`.
RunConfig with_sweep_value(const RunConfig& config, double value);

}  // namespace casimir::cli

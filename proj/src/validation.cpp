#include "casimir/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "casimir/asymptotics.hpp"
#include "casimir/detail/parallel.hpp"
#include "casimir/dispersion.hpp"
#include "casimir/error.hpp"
#include "casimir/permittivity.hpp"
#include "casimir/thermal.hpp"

namespace casimir {

namespace {

// ---------------------------------------------------------------------------
// Brute-force oracle. Deliberately uses its own Newton-Cotes panels instead of
// the Gauss rules of the main path.

struct Axis {
  std::vector<double> x;
  std::vector<double> w;
};

// Composite rule over segments with `per_segment` equal subintervals each.
Axis newton_cotes_axis(const std::vector<double>& segments, int per_segment,
                       OracleScheme scheme) {
  Axis a;
  for (std::size_t s = 0; s + 1 < segments.size(); ++s) {
    const double lo = segments[s];
    const double h = (segments[s + 1] - lo) / per_segment;
    for (int i = 0; i <= per_segment; ++i) {
      double w = h;
      if (scheme == OracleScheme::Simpson)
        w = h / 3.0 * ((i == 0 || i == per_segment) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0));
      else if (i == 0 || i == per_segment)
        w = 0.5 * h;
      // Shared segment endpoints merge with the previous segment's last node.
      if (i == 0 && !a.x.empty()) {
        a.w.back() += w;
        continue;
      }
      a.x.push_back(lo + i * h);
      a.w.push_back(w);
    }
  }
  return a;
}

std::vector<double> oracle_segments(const Configuration& config, double cutoff) {
  const double d = config.gap.value;
  std::vector<double> s{0.0};
  for (double e = 1e-3 / d; e < cutoff; e *= 2.0) s.push_back(e);
  for (double e : spectral_edges(config))
    if (e < cutoff) s.push_back(e);
  s.push_back(cutoff);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int per_segment_count(int grid, std::size_t segments) {
  int q = grid / std::max<int>(1, static_cast<int>(segments));
  q -= q % 4;
  return std::max(q, 4);
}

double zero_k_eps(const Material& m) {
  return m.has_unbound_drude() ? kDrudeLimitEps : eps_static(m);
}

double cartesian_sum(const Configuration& config, const Axis& kappa, const Axis& k,
                     int threads) {
  const auto rows = detail::parallel_map(k.x.size(), threads, [&](std::size_t j) {
    const double kj = k.x[j];
    AxisPermittivity eps;
    if (kj == 0.0) {
      if (uses_plate_material(config.geometry)) eps.plate = zero_k_eps(config.plate_material);
      if (const Material* gm = gap_material(config)) eps.gap = zero_k_eps(*gm);
    } else {
      eps = permittivities(config, kj);
    }
    double row = 0.0;
    for (std::size_t i = 0; i < kappa.x.size(); ++i) {
      const double kap = kappa.x[i];
      if (kap == 0.0) continue;  // integrand carries a factor kappa
      const AxisPoint p{kap, kj};
      const GapReflection r = reflection(config.geometry, p, eps.plate, eps.gap);
      row += kappa.w[i] * kap * p.K0() * inverse_from_reflection(r, config.gap).sum();
    }
    return k.w[j] * row;
  });
  return detail::ordered_sum(rows);
}

// ---------------------------------------------------------------------------
// Suite helpers.

double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

Configuration halfspaces(double d, Material m = default_material()) {
  return Configuration{HalfSpaces{}, std::move(m), Length{d}};
}

Configuration ideal(double d) {
  return Configuration{IdealCasimir{}, vacuum_material(), Length{d}};
}

struct Context {
  PhysicalConstants constants;
  QuadratureSettings settings;  // threads = 1 inside suite items
};

double polar(const Context& c, const Configuration& config) {
  return pressure_zero_T(config, c.settings, c.constants).pressure.value;
}

CheckResult make(std::string name, bool passed, double measured, double tol,
                 std::string detail) {
  return CheckResult{std::move(name), passed, measured, tol, std::move(detail)};
}

using Check = std::function<CheckResult(const Context&)>;

struct NamedCheck {
  std::string name;
  Check run;
};

// Reference value of -pi^2 hbar c / (240 d^4) at d = 10 nm with CODATA 2018
// constants, frozen so that a corrupted constant is detected.
constexpr double kIdealAt10nm = -130012.57724477533;

std::vector<NamedCheck> build_checks() {
  std::vector<NamedCheck> v;

  v.push_back({"casimir_reference_value", [](const Context& c) {
                 const double p = polar(c, ideal(10.0));
                 const double ratio = p / kIdealAt10nm;
                 const double err = std::abs(ratio - 1.0);
                 return make("casimir_reference_value", err < 1e-4, err, 1e-4,
                             "P(10 nm) = " + fmt(p) + " N/m^2, ratio to reference " + fmt(ratio));
               }});

  v.push_back({"ideal_vs_closed_form", [](const Context& c) {
                 double worst = 0.0;
                 for (double d : {1.0, 10.0, 100.0, 1000.0})
                   worst = std::max(worst, rel_diff(polar(c, ideal(d)),
                                                    casimir_ideal(Length{d}, c.constants).value));
                 return make("ideal_vs_closed_form", worst < 1e-4, worst, 1e-4,
                             "d in {1, 10, 100, 1000} nm");
               }});

  v.push_back({"vacuum_plates_zero", [](const Context& c) {
                 const double p = polar(c, halfspaces(10.0, vacuum_material()));
                 return make("vacuum_plates_zero", p == 0.0, std::abs(p), 0.0, "eps = 1");
               }});

  v.push_back({"oracle_vs_polar", [](const Context& c) {
                 const Configuration cfg = halfspaces(10.0);
                 OracleSettings o;
                 o.threads = 1;
                 const double b = pressure_bruteforce(cfg, o, c.constants).pressure.value;
                 const double err = rel_diff(polar(c, cfg), b);
                 return make("oracle_vs_polar", err < 1e-4, err, 1e-4,
                             "half-spaces, default material, d = 10 nm");
               }});

  v.push_back({"pk_vs_polar", [](const Context& c) {
                 double worst = 0.0;
                 for (double d : {1.0, 10.0, 100.0}) {
                   const Configuration cfg = halfspaces(d);
                   worst = std::max(worst, rel_diff(polar(c, cfg),
                                                    pressure_p_k_form(cfg, c.settings, c.constants)
                                                        .pressure.value));
                 }
                 return make("pk_vs_polar", worst < 1e-4, worst, 1e-4, "d in {1, 10, 100} nm");
               }});

  v.push_back({"three_decimal_reproducibility", [](const Context& c) {
                 const Configuration cfg = halfspaces(10.0);
                 Context fine = c;
                 fine.settings.n_theta *= 2;
                 fine.settings.n_chi *= 2;
                 const double err = rel_diff(polar(c, cfg), polar(fine, cfg));
                 return make("three_decimal_reproducibility", err < 5e-4, err, 5e-4,
                             "default grid vs doubled n_theta and n_chi");
               }});

  v.push_back({"sign_and_ideal_bound", [](const Context& c) {
                 const Material m = default_material();
                 const double d = 10.0;
                 const std::vector<Configuration> cases{
                     halfspaces(d),
                     {SlabSlab{Length{5.0}, Length{5.0}}, m, Length{d}},
                     {FilledGap{Length{5.0}, single_oscillator(2.0, 0.05)}, m, Length{d}},
                     {FilmInVacuum{m}, vacuum_material(), Length{d}},
                     {ConductiveSheets{1.0}, vacuum_material(), Length{d}},
                 };
                 const double bound = std::abs(casimir_ideal(Length{d}, c.constants).value);
                 bool ok = true;
                 double worst = 0.0;
                 for (const auto& cfg : cases) {
                   const double p = polar(c, cfg);
                   ok = ok && p < 0.0 && std::abs(p) < bound;
                   worst = std::max(worst, std::abs(p) / bound);
                 }
                 return make("sign_and_ideal_bound", ok, worst, 1.0,
                             "max |P| / |P_ideal| over five geometries, P < 0 required");
               }});

  v.push_back({"distance_monotonicity", [](const Context& c) {
                 double prev = std::numeric_limits<double>::infinity();
                 bool ok = true;
                 for (double d = 1.0; d <= 512.0; d *= 2.0) {
                   const double p = std::abs(polar(c, halfspaces(d)));
                   ok = ok && p < prev;
                   prev = p;
                 }
                 return make("distance_monotonicity", ok, ok ? 0.0 : 1.0, 0.0,
                             "|P| strictly decreasing on d = 1, 2, ..., 512 nm");
               }});

  v.push_back({"large_d_slope", [](const Context& c) {
                 const double p1 = std::abs(polar(c, halfspaces(500.0)));
                 const double p2 = std::abs(polar(c, halfspaces(2000.0)));
                 const double slope = std::log(p2 / p1) / std::log(4.0);
                 return make("large_d_slope", std::abs(slope + 4.0) <= 0.05,
                             slope, 0.05, "log-log slope over [500, 2000] nm, target -4");
               }});

  v.push_back({"large_d_handoff", [](const Context& c) {
                 const double d = 1000.0;
                 const Material m = default_material();
                 const double p = polar(c, halfspaces(d, m));
                 const double est =
                     large_d_dielectric(eps_static(m), Length{d}, m.max_resonance(), c.constants)
                         .pressure.value;
                 const double err = rel_diff(p, est);
                 return make("large_d_handoff", err < 0.1, err, 0.1,
                             "half-spaces vs frozen-eps estimate at d = 1000 nm");
               }});

  v.push_back({"thickness_saturation", [](const Context& c) {
                 const Material m = default_material();
                 const double slab = polar(c, {SlabSlab{Length{20.0}, Length{20.0}}, m, Length{10.0}});
                 const double half = polar(c, halfspaces(10.0, m));
                 const double ratio = slab / half;
                 return make("thickness_saturation", ratio > 0.95, ratio, 0.95,
                             "|P(t = 20 nm)| / |P(t -> inf)| at d = 10 nm");
               }});

  v.push_back({"thin_plate_scaling", [](const Context& c) {
                 const Material m = default_material();
                 std::vector<double> r;
                 for (double t : {0.01, 0.02, 0.04})
                   r.push_back(std::abs(polar(c, {SlabSlab{Length{t}, Length{t}}, m, Length{10.0}})) /
                               (t * t));
                 const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
                 const double spread = (*hi - *lo) / *hi;
                 return make("thin_plate_scaling", spread < 0.02, spread, 0.02,
                             "spread of |P| / t^2 over t = 0.01, 0.02, 0.04 nm at d = 10 nm");
               }});

  v.push_back({"tail_control", [](const Context& c) {
                 double worst = 0.0;
                 for (double d : {1.0, 10.0, 100.0})
                   worst = std::max(worst,
                                    pressure_zero_T(halfspaces(d), c.settings, c.constants).tail_fraction);
                 return make("tail_control", worst < 1e-3, worst, 1e-3, "tail / total, d in {1, 10, 100} nm");
               }});

  v.push_back({"tail_closed_form_oracle", [](const Context&) {
                 std::mt19937_64 rng(7);
                 std::uniform_real_distribution<double> u(0.0, 1.0);
                 double worst = 0.0;
                 for (int i = 0; i < 1000; ++i) {
                   const double d = std::pow(10.0, -2.0 + 4.0 * u(rng));
                   const double chi0 = 20.0 / d * u(rng);
                   const double pe = 1.0 + 100.0 * u(rng);
                   const double ph = 1.0 + 100.0 * u(rng);
                   const double closed = tail_closed_form(chi0, Length{d}, pe, ph);
                   const auto f = [&](double x) {
                     return x * x * std::exp(-2.0 * x * d) * (1.0 / pe + 1.0 / ph);
                   };
                   const double adaptive =
                       boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                           f, chi0, std::numeric_limits<double>::infinity(), 15, 1e-13);
                   worst = std::max(worst, rel_diff(closed, adaptive));
                 }
                 return make("tail_closed_form_oracle", worst < 1e-10, worst, 1e-10,
                             "1000 random draws vs adaptive Gauss-Kronrod");
               }});

  v.push_back({"formulation_equivalences", [](const Context&) {
                 std::mt19937_64 rng(11);
                 std::uniform_real_distribution<double> u(0.0, 1.0);
                 double worst = 0.0;
                 for (int i = 0; i < 1000; ++i) {
                   const double d = std::pow(10.0, -1.0 + 3.0 * u(rng));
                   const AxisPoint p{std::pow(10.0, -3.0 + 3.0 * u(rng)) / d,
                                     std::pow(10.0, -3.0 + 3.0 * u(rng)) / d};
                   const double eps = 1.0 + std::pow(10.0, -2.0 + 4.0 * u(rng));
                   const double t = std::pow(10.0, -1.0 + 2.0 * u(rng));
                   const auto h = inv_f_halfspace(p, Length{d}, eps);
                   const auto z = inv_f_impedance(p, Length{d}, eps);
                   const auto s_inf = inv_f_slabs(p, Length{d}, Length{1e6 / p.K0()}, eps);
                   const auto s = inv_f_slabs(p, Length{d}, Length{t}, eps);
                   const auto g = inv_f_filled_gap(p, Length{d}, Length{t}, eps, 1.0);
                   worst = std::max({worst, rel_diff(h.sum(), z.sum()), rel_diff(h.sum(), s_inf.sum()),
                                     rel_diff(s.sum(), g.sum())});
                 }
                 return make("formulation_equivalences", worst < 1e-10, worst, 1e-10,
                             "impedance, thick-slab and unit-eps filled-gap vs reference forms");
               }});

  v.push_back({"bracket_bound", [](const Context&) {
                 std::mt19937_64 rng(13);
                 std::uniform_real_distribution<double> u(0.0, 1.0);
                 const Material m = default_material();
                 bool ok = true;
                 double worst = 0.0;
                 for (int i = 0; i < 1000; ++i) {
                   const double d = std::pow(10.0, 3.0 * u(rng));
                   const AxisPoint p{std::pow(10.0, -4.0 + 4.0 * u(rng)),
                                     std::pow(10.0, -4.0 + 4.0 * u(rng))};
                   const Configuration cfg = halfspaces(d, m);
                   const auto g = inv_f(cfg, p);
                   const double cap = 1.0 / std::expm1(2.0 * p.K0() * d);
                   ok = ok && g.g_e >= 0.0 && g.g_h >= 0.0 && g.g_e <= cap && g.g_h <= cap;
                   if (cap > 0.0) worst = std::max(worst, std::max(g.g_e, g.g_h) / cap);
                 }
                 return make("bracket_bound", ok, worst, 1.0, "0 <= g <= 1/(exp(2 K0 d) - 1)");
               }});

  v.push_back({"permittivity_monotone", [](const Context&) {
                 std::mt19937_64 rng(17);
                 std::uniform_real_distribution<double> u(0.0, 1.0);
                 bool ok = true;
                 for (int i = 0; i < 1000; ++i) {
                   Material m;
                   const int terms = 1 + static_cast<int>(6 * u(rng));
                   for (int j = 0; j < terms; ++j)
                     m.bound_terms.push_back({0.1 * u(rng), 0.001 + 0.1 * u(rng), 1e-3 * u(rng)});
                   double prev = std::numeric_limits<double>::infinity();
                   for (double k = 0.0; k < 10.0; k = k * 1.5 + 1e-4) {
                     const double e = eps_imag_axis(m, k);
                     ok = ok && e >= 1.0 && e <= prev;
                     prev = e;
                   }
                 }
                 return make("permittivity_monotone", ok, ok ? 0.0 : 1.0, 0.0,
                             "eps(k) >= 1 and non-increasing for random Lorentz materials");
               }});

  v.push_back({"thermal_low_T_limit", [](const Context& c) {
                 const Configuration cfg = halfspaces(100.0);
                 const double pt =
                     pressure_finite_T(cfg, Temperature{1.0}, c.settings, ZeroFrequencyMode::Static,
                                       c.constants).pressure.value;
                 const double err = rel_diff(pt, polar(c, cfg));
                 return make("thermal_low_T_limit", err < 5e-3, err, 5e-3, "T = 1 K, d = 100 nm");
               }});

  v.push_back({"thermal_high_T_limit", [](const Context& c) {
                 const double d = 2000.0;
                 const Temperature T{3000.0};
                 const Configuration cfg = halfspaces(d);
                 const double x = 2.0 * std::numbers::pi * thermal_wavenumber(T, c.constants) * d;
                 const double pt = pressure_finite_T(cfg, T, c.settings, ZeroFrequencyMode::Static,
                                                     c.constants).pressure.value;
                 const double ph = pressure_high_T(cfg, T, c.settings, ZeroFrequencyMode::Static,
                                                   c.constants).pressure.value;
                 const double err = rel_diff(pt, ph);
                 return make("thermal_high_T_limit", err < 0.02 && x > 10.0, err, 0.02,
                             "2 pi k_B T d / (hbar c) = " + fmt(x));
               }});

  v.push_back({"low_T_correction", [](const Context& c) {
                 const Configuration cfg = halfspaces(10.0);
                 const Temperature T{300.0};
                 const double dp = pressure_low_T_correction(cfg, T, c.settings, c.constants).value;
                 const double pt = pressure_finite_T(cfg, T, c.settings, ZeroFrequencyMode::Static,
                                                     c.constants).pressure.value;
                 const double err = rel_diff(polar(c, cfg) + dp, pt);
                 return make("low_T_correction", err < 0.02 && dp < 0.0, err, 0.02,
                             "P(d, 0) + dP vs Matsubara sum at 300 K, d = 10 nm; dP = " + fmt(dp));
               }});

  v.push_back({"high_T_linearity", [](const Context& c) {
                 const Configuration cfg = halfspaces(100.0);
                 const double p1 = pressure_high_T(cfg, Temperature{300.0}, c.settings,
                                                   ZeroFrequencyMode::Static, c.constants).pressure.value;
                 const double p2 = pressure_high_T(cfg, Temperature{600.0}, c.settings,
                                                   ZeroFrequencyMode::Static, c.constants).pressure.value;
                 return make("high_T_linearity", p2 == 2.0 * p1, std::abs(p2 / p1 - 2.0), 0.0,
                             "P(2T) == 2 P(T)");
               }});

  return v;
}

}  // namespace

PressureResult pressure_bruteforce(const Configuration& config, const OracleSettings& oracle,
                                   const PhysicalConstants& constants) {
  validate(config);
  if (oracle.grid_kappa < 256 || oracle.grid_k < 256)
    throw Error(ErrorCode::InvalidArgument, "oracle grid counts must be >= 256");
  const double d = config.gap.value;
  const double automatic = 2.0 * std::max(chi_max_rule(config), 20.0 / d);
  const double kap_max = oracle.kappa_max > 0.0 ? oracle.kappa_max : automatic;
  const double k_max = oracle.k_max > 0.0 ? oracle.k_max : automatic;

  const auto seg_kap = oracle_segments(config, kap_max);
  const auto seg_k = oracle_segments(config, k_max);
  const int q_kap = per_segment_count(oracle.grid_kappa, seg_kap.size() - 1);
  const int q_k = per_segment_count(oracle.grid_k, seg_k.size() - 1);

  const Axis kap_fine = newton_cotes_axis(seg_kap, q_kap, oracle.scheme);
  const Axis k_fine = newton_cotes_axis(seg_k, q_k, oracle.scheme);
  const Axis kap_half = newton_cotes_axis(seg_kap, q_kap / 2, oracle.scheme);
  const Axis k_half = newton_cotes_axis(seg_k, q_k / 2, oracle.scheme);

  const double fine = cartesian_sum(config, kap_fine, k_fine, oracle.threads);
  const double half = cartesian_sum(config, kap_half, k_half, oracle.threads);
  const double factor = oracle.scheme == OracleScheme::Simpson ? 16.0 : 4.0;
  const double extrapolated = (factor * fine - half) / (factor - 1.0);

  if (std::abs(fine - half) > 1e-2 * std::abs(fine))
    throw Error(ErrorCode::NonConvergent, "oracle grid halving changes the result by more than 1%");

  const double prefactor = unit_pressure_prefactor(config.gap, constants);
  PressureResult out;
  out.pressure = Pressure{-prefactor * extrapolated + 0.0};
  out.est_error = prefactor * std::abs(extrapolated - fine);
  out.evaluations = kap_fine.x.size() * k_fine.x.size() + kap_half.x.size() * k_half.x.size();
  out.chi_max = std::max(kap_max, k_max);
  return out;
}

bool SuiteReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string SuiteReport::text() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.passed ? 1 : 0;
    os << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << fmt(c.measured)
       << " tol=" << fmt(c.tolerance) << "  " << c.detail << '\n';
  }
  os << passed << '/' << checks.size() << " checks passed\n";
  return os.str();
}

std::string SuiteReport::csv() const {
  std::ostringstream os;
  os << "check,status,measured,tolerance,detail\n" << std::setprecision(17);
  for (const auto& c : checks) {
    std::string detail = c.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    os << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << c.measured << ','
       << c.tolerance << ',' << detail << '\n';
  }
  return os.str();
}

std::vector<std::string> suite_check_names() {
  std::vector<std::string> names;
  for (const auto& c : build_checks()) names.push_back(c.name);
  return names;
}

SuiteReport run_suite(const SuiteOptions& options) {
  std::vector<NamedCheck> selected;
  for (auto& c : build_checks())
    if (options.filter.empty() || c.name.find(options.filter) != std::string::npos)
      selected.push_back(std::move(c));

  Context ctx;
  ctx.constants = options.constants;
  ctx.settings.threads = 1;

  const auto results =
      detail::parallel_map(selected.size(), options.threads, [&](std::size_t i) {
        try {
          return selected[i].run(ctx);
        } catch (const std::exception& e) {
          return make(selected[i].name, false, std::numeric_limits<double>::quiet_NaN(), 0.0,
                      std::string("threw: ") + e.what());
        }
      });
  return SuiteReport{results};
}

}  // namespace casimir

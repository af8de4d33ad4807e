#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "casimir/detail/gauss_rule.hpp"
#include "casimir/detail/parallel.hpp"
#include "casimir/dispersion.hpp"
#include "casimir/error.hpp"

namespace casimir {

namespace {

using detail::QuadratureRule;

constexpr int kMaxRecomputes = 8;
constexpr int kMaxRaiseSteps = 80;
constexpr double kRaiseFactor = 1.25;

// chi^3 moment of exp(-2 chi d) beyond chi0.
double cubic_moment(double chi0, double d) {
  const double d2 = d * d;
  return std::exp(-2.0 * d * chi0) *
         (chi0 * chi0 * chi0 / (2.0 * d) + 3.0 * chi0 * chi0 / (4.0 * d2) +
          3.0 * chi0 / (4.0 * d2 * d) + 3.0 / (8.0 * d2 * d2));
}

double quadratic_moment(double chi0, double d) {
  return std::exp(-2.0 * d * chi0) *
         (chi0 * chi0 / (2.0 * d) + chi0 / (2.0 * d * d) + 1.0 / (4.0 * d * d * d));
}

double linear_moment(double chi0, double d) {
  return std::exp(-2.0 * d * chi0) * (chi0 / (2.0 * d) + 1.0 / (4.0 * d * d));
}

double inverse_or_zero(double phi) { return std::isinf(phi) ? 0.0 : 1.0 / phi; }

std::vector<double> radial_edges(const Configuration& config,
                                 const QuadratureSettings& settings,
                                 std::vector<double> extra) {
  std::vector<double> edges = settings.chi_subdomain_edges.empty()
                                  ? spectral_edges(config)
                                  : settings.chi_subdomain_edges;
  const double floor_edge = 1e-4 / config.gap.value;
  if (edges.empty() || floor_edge < *std::min_element(edges.begin(), edges.end()))
    edges.push_back(floor_edge);
  edges.insert(edges.end(), extra.begin(), extra.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::erase_if(edges, [](double e) { return !(e > 0.0); });
  return edges;
}

std::vector<double> below(std::vector<double> edges, double b) {
  std::erase_if(edges, [b](double e) { return e >= b; });
  return edges;
}

double initial_cutoff(const Configuration& config, const QuadratureSettings& settings) {
  if (settings.chi_max <= 0.0) return chi_max_rule(config);
  const std::vector<double> edges = radial_edges(config, settings, {});
  if (!edges.empty() && settings.chi_max <= edges.back())
    throw Error(ErrorCode::InvalidArgument,
                "chi_max must exceed every radial subdomain edge");
  return settings.chi_max;
}

bool strip_uses_phi_limits(const Configuration& config) {
  const bool plates = std::holds_alternative<HalfSpaces>(config.geometry) ||
                      std::holds_alternative<SlabSlab>(config.geometry);
  return plates && !config.plate_material.has_unbound_drude() &&
         !config.plate_material.is_vacuum();
}

struct AngleNode {
  double theta{};
  double weight{};  // includes cos(theta)
  bool strip{};
};

std::vector<AngleNode> angle_nodes(const QuadratureSettings& s) {
  const auto add = [](std::vector<AngleNode>& out, const QuadratureRule& rule, bool strip) {
    for (std::size_t i = 0; i < rule.size(); ++i)
      out.push_back({rule.nodes[i], rule.weights[i] * std::cos(rule.nodes[i]), strip});
  };
  const int strip_panels = std::max(1, s.n_strip / detail::kPanelOrder);
  const int main_panels = std::max(1, s.n_theta / detail::kPanelOrder);
  std::vector<AngleNode> out;
  add(out, detail::composite_linear(0.0, s.theta0, strip_panels), true);
  add(out, detail::composite_linear(s.theta0, std::numbers::pi / 2.0, main_panels), false);
  return out;
}

// Reflection-factor sum (r_e + r_h) e^{-2 (X - chi) d} of the remainder at
// (chi0, theta), one evaluation.
double tail_reflection(const Configuration& config, const AngleNode& node, double chi0,
                       double strip_eps0) {
  if (node.strip && strip_eps0 > 1.0) {
    try {
      const PhiLimits phi = phi_limits_small_angle(strip_eps0);
      return 1.0 / phi.phi_e + 1.0 / phi.phi_h;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PhiDenominatorZero) throw;
    }
  }
  const AxisPoint p{chi0 * std::cos(node.theta), chi0 * std::sin(node.theta)};
  const GapReflection r = reflection(config, p);
  const double excess = std::max(0.0, r.exponent - chi0);
  return (r.r_e + r.r_h) * std::exp(-2.0 * excess * config.gap.value);
}

double polar_tail(const Configuration& config, const std::vector<AngleNode>& nodes,
                  double chi0, double strip_eps0, std::size_t& evaluations) {
  const double moment = cubic_moment(chi0, config.gap.value);
  if (moment == 0.0) return 0.0;
  double s = 0.0;
  for (const AngleNode& n : nodes) {
    s += n.weight * moment * tail_reflection(config, n, chi0, strip_eps0);
    ++evaluations;
  }
  return s;
}

struct BodyPair {
  double fine{};
  double coarse{};
};

double radial_body(const Configuration& config, double theta, const QuadratureRule& rule) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double chi = rule.nodes[i];
    const double g = inv_f(config, AxisPoint{chi * c, chi * s}).sum();
    sum += rule.weights[i] * chi * chi * chi * g;
  }
  return sum;
}

// Raises chi0 geometrically until tail(chi0) <= target. Returns chi0 unchanged
// when it already satisfies the target.
template <class Tail>
double raise_cutoff(double chi0, double target, Tail&& tail) {
  for (int i = 0; i < kMaxRaiseSteps; ++i) {
    if (std::abs(tail(chi0)) <= target) return chi0;
    chi0 *= kRaiseFactor;
  }
  throw Error(ErrorCode::NonConvergent, "tail bound does not fall below rel_tol");
}

PressureResult finish(double total, double coarse, double tail, double prefactor,
                      double cutoff, std::size_t evaluations,
                      const QuadratureSettings& settings) {
  const double diff = settings.refinement_check ? std::abs(total - coarse) : 0.0;
  if (settings.refinement_check && diff > 100.0 * settings.rel_tol * std::abs(total))
    throw Error(ErrorCode::NonConvergent,
                "halving n_chi changes the result by " +
                    std::to_string(diff / std::abs(total)) + " relative");
  PressureResult out;
  out.pressure = Pressure{-prefactor * total + 0.0};
  out.tail_fraction = total == 0.0 ? 0.0 : std::abs(tail / total);
  out.evaluations = evaluations;
  out.est_error = prefactor * std::max(std::abs(tail), diff);
  out.chi_max = cutoff;
  return out;
}

}  // namespace

void validate(const QuadratureSettings& s) {
  if (s.n_theta < 8) throw Error(ErrorCode::InvalidArgument, "n_theta must be >= 8");
  if (s.n_chi < 64) throw Error(ErrorCode::InvalidArgument, "n_chi must be >= 64");
  if (s.n_strip < 8) throw Error(ErrorCode::InvalidArgument, "n_strip must be >= 8");
  if (!(s.theta0 > 0.0 && s.theta0 < std::numbers::pi / 2.0))
    throw Error(ErrorCode::InvalidArgument, "theta0 must lie in (0, pi/2)");
  if (!(s.rel_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "rel_tol must be > 0");
  if (s.chi_max < 0.0) throw Error(ErrorCode::InvalidArgument, "chi_max must be >= 0");
}

double chi_max_rule(const Configuration& config) {
  return 1.0 + 10.0 * max_resonance(config) + 1.0 / config.gap.value;
}

double tail_closed_form(double chi0, Length d, double phi_e, double phi_h) {
  return quadratic_moment(chi0, d.value) * (inverse_or_zero(phi_e) + inverse_or_zero(phi_h));
}

double tail_closed_form_cubic(double chi0, Length d, double phi_e, double phi_h) {
  return cubic_moment(chi0, d.value) * (inverse_or_zero(phi_e) + inverse_or_zero(phi_h));
}

PhiLimits phi_limits_small_angle(double eps0) {
  if (!(eps0 > 1.0))
    throw Error(ErrorCode::InvalidArgument, "phi_limits_small_angle needs eps0 > 1");
  const double root = std::sqrt(1.0 + eps0);
  const double den = 1.0 + eps0 - eps0 * eps0;
  if (std::abs(den) < 1e-6)
    throw Error(ErrorCode::PhiDenominatorZero,
                "1 + eps0 - eps0^2 vanishes at eps0 = " + std::to_string(eps0));
  const double h = (2.0 * root + 2.0 + eps0) / eps0;
  const double e = (1.0 + 2.0 * eps0 * root + eps0 + eps0 * eps0) / den;
  return {e * e, h * h};
}

PressureResult pressure_zero_T(const Configuration& config,
                               const QuadratureSettings& settings,
                               const PhysicalConstants& constants) {
  validate(config);
  validate(settings);
  const double prefactor = unit_pressure_prefactor(config.gap, constants);
  const std::vector<AngleNode> nodes = angle_nodes(settings);
  const double strip_eps0 =
      strip_uses_phi_limits(config) ? eps_static(config.plate_material) : 0.0;

  std::size_t evaluations = 0;
  double cutoff = initial_cutoff(config, settings);
  for (int round = 0; round < kMaxRecomputes; ++round) {
    const std::vector<double> edges = below(radial_edges(config, settings, {}), cutoff);
    const QuadratureRule fine = detail::graded_rule(edges, cutoff, settings.n_chi);
    const QuadratureRule coarse = settings.refinement_check
                                      ? detail::graded_rule(edges, cutoff, settings.n_chi / 2)
                                      : QuadratureRule{};
    const auto bodies = detail::parallel_map(nodes.size(), settings.threads, [&](std::size_t j) {
      BodyPair b;
      b.fine = radial_body(config, nodes[j].theta, fine);
      if (settings.refinement_check) b.coarse = radial_body(config, nodes[j].theta, coarse);
      return b;
    });
    evaluations += nodes.size() * (fine.size() + coarse.size());

    double body = 0.0;
    double body_coarse = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      body += nodes[j].weight * bodies[j].fine;
      body_coarse += nodes[j].weight * bodies[j].coarse;
    }
    const double tail = polar_tail(config, nodes, cutoff, strip_eps0, evaluations);
    const double total = body + tail;
    const double target = settings.rel_tol * std::abs(total);
    const bool last = round + 1 == kMaxRecomputes;
    if (total == 0.0 || std::abs(tail) <= target || settings.chi_max > 0.0) {
      return finish(total, body_coarse + tail, tail, prefactor, cutoff, evaluations,
                    settings);
    }
    if (last) break;
    cutoff = raise_cutoff(cutoff, 0.5 * target, [&](double c) {
      return polar_tail(config, nodes, c, strip_eps0, evaluations);
    });
  }
  throw Error(ErrorCode::NonConvergent, "radial cutoff did not settle");
}

double p_integral(const Configuration& config, double k, double eps_plate, double eps_gap,
                  std::size_t* evaluations) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidArgument, "p_integral needs k > 0");
  const double d = config.gap.value;
  const double s = 2.0 * k * d;

  // Panels in u = s (p - 1): linear on [0, u0], then doubling up to 64.
  std::vector<double> edges{0.0};
  for (double u = std::min(s, 1.0) / 8.0; u < 64.0; u *= 2.0) edges.push_back(u);
  edges.push_back(64.0);

  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const QuadratureRule rule = detail::composite_linear(edges[i], edges[i + 1], 1);
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double u = rule.nodes[j];
      const double pm1 = u / s;
      const double p = 1.0 + pm1;
      const AxisPoint pt{k * std::sqrt(pm1 * (p + 1.0)), k};
      const GapReflection r = reflection(config.geometry, pt, eps_plate, eps_gap);
      sum += rule.weights[j] * p * p * inverse_from_reflection(r, config.gap).sum();
    }
    count += rule.size();
  }
  if (evaluations != nullptr) *evaluations += count;
  return sum / s;
}

PressureResult pressure_p_k_form(const Configuration& config,
                                 const QuadratureSettings& settings,
                                 const PhysicalConstants& constants) {
  validate(config);
  validate(settings);
  const double d = config.gap.value;
  const double prefactor = unit_pressure_prefactor(config.gap, constants);

  const auto outer = [&](const QuadratureRule& rule, std::size_t& evaluations) {
    const auto values = detail::parallel_map(rule.size(), settings.threads, [&](std::size_t i) {
      const double k = rule.nodes[i];
      const AxisPermittivity eps = permittivities(config, k);
      std::size_t local = 0;
      const double v = rule.weights[i] * k * k * k * p_integral(config, k, eps.plate, eps.gap, &local);
      return std::pair{v, local};
    });
    double s = 0.0;
    for (const auto& [v, n] : values) {
      s += v;
      evaluations += n;
    }
    return s;
  };
  // Beyond k_max the integrand is bounded by the p = 1 reflection factors
  // times int_1^inf p^2 e^{-2pkd} dp; its k^3-weighted integral is the
  // quadratic moment in the combined wavenumber.
  const auto tail_at = [&](double kmax, std::size_t& evaluations) {
    const GapReflection r = reflection(config, AxisPoint{0.0, kmax});
    ++evaluations;
    const double excess = std::max(0.0, r.exponent - kmax);
    const double weight = (r.r_e + r.r_h) * std::exp(-2.0 * excess * d);
    return weight * (quadratic_moment(kmax, d) / (2.0 * d) +
                     linear_moment(kmax, d) / (2.0 * d * d) +
                     std::exp(-2.0 * d * kmax) / (8.0 * d * d * d * d));
  };

  std::size_t evaluations = 0;
  double cutoff = initial_cutoff(config, settings);
  const std::vector<double> scaled{0.1 / d, 1.0 / d, 10.0 / d};
  for (int round = 0; round < kMaxRecomputes; ++round) {
    const std::vector<double> edges = below(radial_edges(config, settings, scaled), cutoff);
    const QuadratureRule fine = detail::graded_rule(edges, cutoff, settings.n_chi);
    const double body = outer(fine, evaluations);
    const double body_coarse =
        settings.refinement_check
            ? outer(detail::graded_rule(edges, cutoff, settings.n_chi / 2), evaluations)
            : 0.0;
    const double tail = tail_at(cutoff, evaluations);
    const double total = body + tail;
    const double target = settings.rel_tol * std::abs(total);
    if (total == 0.0 || std::abs(tail) <= target || settings.chi_max > 0.0)
      return finish(total, body_coarse + tail, tail, prefactor, cutoff, evaluations,
                    settings);
    if (round + 1 == kMaxRecomputes) break;
    cutoff = raise_cutoff(cutoff, 0.5 * target,
                          [&](double c) { return tail_at(c, evaluations); });
  }
  throw Error(ErrorCode::NonConvergent, "cutoff did not settle");
}

}  // namespace casimir

#include "casimir/dispersion.hpp"

#include <cassert>
#include <cmath>

#include "casimir/detail/overloaded.hpp"
#include "casimir/error.hpp"

namespace casimir {

namespace {

void require_gap(Length d) {
  if (!(d.value > 0.0)) throw_gap_zero(d.value);
}

void require_eps(double eps, const char* what) {
  if (!(eps >= 1.0))
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " must be >= 1 on the imaginary axis");
}

// k^2 (eps - 1) = K^2 - K0^2 without cancellation.
double te_contrast(const AxisPoint& p, double eps) {
  return p.k * p.k * (eps - 1.0);
}

// (eps - 1)(kappa^2 (1 + eps) + eps k^2) = eps^2 K0^2 - K^2.
double tm_contrast(const AxisPoint& p, double eps) {
  return (eps - 1.0) * (p.kappa * p.kappa * (1.0 + eps) + eps * p.k * p.k);
}

double sq(double x) { return x * x; }

GapReflection slab_reflection(const AxisPoint& p, double t, double eps) {
  const double K0 = p.K0();
  const double K = p.K(eps);
  const double th = std::tanh(K * t);
  // Brackets of f_h, f_e multiplied through by tanh(Kt).
  const double nh = 2.0 * K0 * K + (K * K + K0 * K0) * th;
  const double ne = 2.0 * eps * K0 * K + (K * K + eps * eps * K0 * K0) * th;
  if (nh == 0.0 || ne == 0.0)
    throw Error(ErrorCode::DegenerateBracket, "K = K0 = 0 in slab bracket");
  return {sq(tm_contrast(p, eps) * th / ne), sq(te_contrast(p, eps) * th / nh),
          K0};
}

GapReflection halfspace_reflection(const AxisPoint& p, double eps) {
  const double K0 = p.K0();
  const double K = p.K(eps);
  const double sh = sq(K + K0);
  const double se = sq(K + eps * K0);
  if (sh == 0.0 || se == 0.0)
    throw Error(ErrorCode::DegenerateBracket, "K = K0 = 0 in half-space bracket");
  return {sq(tm_contrast(p, eps) / se), sq(te_contrast(p, eps) / sh), K0};
}

GapReflection filled_gap_reflection(const AxisPoint& p, double t, double eps,
                                    double eps_gap) {
  const double K0 = p.K0();
  const double K = p.K(eps);
  const double Kg = p.K(eps_gap);
  const double th = std::tanh(K * t);
  const double A = te_contrast(p, eps_gap) / (Kg + K0);  // Kg - K0
  // Kg K0 - K^2 and eps^2 Kg K0 - eps_gap K^2, split so that eps_gap = 1
  // reproduces the slab brackets exactly.
  const double h_mix = K0 * A - te_contrast(p, eps);
  const double e_mix =
      eps * eps * K0 * A + tm_contrast(p, eps) - (eps_gap - 1.0) * K * K;
  const double Kg_minus = -tm_contrast(p, eps_gap) / (Kg + eps_gap * K0);

  const double nh = K * (Kg + K0) + (Kg * K0 + K * K) * th;
  const double dh = K * A + h_mix * th;
  const double ne =
      eps * K * (Kg + eps_gap * K0) + (eps * eps * Kg * K0 + eps_gap * K * K) * th;
  const double de = eps * K * Kg_minus + e_mix * th;
  if (nh == 0.0 || ne == 0.0)
    throw Error(ErrorCode::DegenerateBracket, "zero filled-gap bracket");
  return {sq(de / ne), sq(dh / nh), Kg};
}

GapReflection sheet_reflection(const AxisPoint& p, double zeta) {
  if (!(zeta >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "zeta must be >= 0");
  const double K0 = p.K0();
  if (zeta == 0.0) return {0.0, 0.0, K0};
  auto r = [zeta](double rho) {
    if (std::isinf(rho)) return 1.0;
    const double a = zeta * rho;
    return sq(a / (2.0 + a));
  };
  const double rho0_e = p.k > 0.0 ? K0 / p.k : INFINITY;
  const double rho0_h = p.k / K0;
  return {r(rho0_e), r(rho0_h), K0};
}

}  // namespace

double AxisPoint::K0() const { return std::sqrt(kappa * kappa + k * k); }

double AxisPoint::K(double eps) const {
  const double arg = kappa * kappa + k * k * eps;
  assert(arg >= 0.0);
  return std::sqrt(arg);
}

InverseCharValue inverse_from_reflection(const GapReflection& r, Length d) {
  require_gap(d);
  const double x = -2.0 * r.exponent * d.value;
  const double e = std::exp(x);
  const double em1 = std::expm1(x);
  auto g = [&](double refl) {
    if (refl == 0.0 || e == 0.0) return 0.0;
    // 1 - r e written so that r = 1, small X d keeps full precision.
    const double denom = (1.0 - refl) - refl * em1;
    return refl * e / denom;
  };
  return {g(r.r_e), g(r.r_h)};
}

InverseCharValue inv_f_slabs(const AxisPoint& p, Length d, Length t, double eps) {
  require_gap(d);
  require_eps(eps, "plate permittivity");
  if (!(t.value >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "thickness must be >= 0");
  return inverse_from_reflection(slab_reflection(p, t.value, eps), d);
}

InverseCharValue inv_f_halfspace(const AxisPoint& p, Length d, double eps) {
  require_gap(d);
  require_eps(eps, "plate permittivity");
  return inverse_from_reflection(halfspace_reflection(p, eps), d);
}

InverseCharValue inv_f_thin_plate(const AxisPoint& p, Length d, Length t,
                                  double eps, ThinPlateEMode mode) {
  require_gap(d);
  require_eps(eps, "plate permittivity");
  const double K0 = p.K0();
  const double e = std::exp(-2.0 * K0 * d.value);
  const double tt = t.value * t.value;
  const double te = te_contrast(p, eps);
  const double tm = tm_contrast(p, eps);
  const double rh = tt * (te * te / (4.0 * K0 * K0));
  const double re = mode == ThinPlateEMode::Squared
                        ? tt * (tm * tm / (4.0 * eps * eps * K0 * K0))
                        : tt * (-tm / (4.0 * eps * eps * K0 * K0));
  return {re * e, rh * e};
}

InverseCharValue inv_f_filled_gap(const AxisPoint& p, Length d, Length t,
                                  double eps, double eps_gap) {
  require_gap(d);
  require_eps(eps, "plate permittivity");
  require_eps(eps_gap, "gap permittivity");
  if (!(t.value >= 0.0))
    throw Error(ErrorCode::InvalidArgument, "thickness must be >= 0");
  return inverse_from_reflection(filled_gap_reflection(p, t.value, eps, eps_gap),
                                 d);
}

InverseCharValue inv_f_sheet(const AxisPoint& p, Length d, double zeta) {
  require_gap(d);
  return inverse_from_reflection(sheet_reflection(p, zeta), d);
}

Impedances impedance_rho(const AxisPoint& p, double eps) {
  if (!(p.k > 0.0))
    throw Error(ErrorCode::InvalidArgument, "impedances need k > 0");
  const double K0 = p.K0();
  const double K = p.K(eps);
  return {K / (p.k * eps), p.k / K, K0 / p.k, p.k / K0};
}

namespace {

// rho0 - rho for both modes, evaluated without cancellation.
struct ImpedanceContrast {
  double e;
  double h;
};

ImpedanceContrast impedance_contrast(const AxisPoint& p, double eps) {
  const double K0 = p.K0();
  const double K = p.K(eps);
  return {tm_contrast(p, eps) / (p.k * eps * (eps * K0 + K)),
          p.k * te_contrast(p, eps) / ((K + K0) * K * K0)};
}

}  // namespace

InverseCharValue inv_f_bar_impedance(const AxisPoint& p, Length d, double eps) {
  require_gap(d);
  require_eps(eps, "plate permittivity");
  const Impedances z = impedance_rho(p, eps);
  const ImpedanceContrast diff = impedance_contrast(p, eps);
  const double e = std::exp(-2.0 * p.K0() * d.value);
  auto fbar = [e](double rho0, double rho, double delta) {
    if (e == 0.0) return 0.0;
    return 2.0 * rho0 * delta * e / (sq(rho0 + rho) - sq(delta) * e);
  };
  return {fbar(z.rho0_e, z.rho_e, diff.e), fbar(z.rho0_h, z.rho_h, diff.h)};
}

InverseCharValue inv_f_impedance(const AxisPoint& p, Length d, double eps) {
  const InverseCharValue bar = inv_f_bar_impedance(p, d, eps);
  const Impedances z = impedance_rho(p, eps);
  const ImpedanceContrast diff = impedance_contrast(p, eps);
  // f~ = 2 rho0 fbar / (rho0 - rho), i.e. 1/f~ = (rho0 - rho) / (2 rho0) / fbar.
  return {bar.g_e * diff.e / (2.0 * z.rho0_e), bar.g_h * diff.h / (2.0 * z.rho0_h)};
}

GapReflection reflection(const Geometry& geometry, const AxisPoint& p,
                         double eps_plate, double eps_gap) {
  return std::visit(
      detail::overloaded{
          [&](const IdealCasimir&) { return GapReflection{1.0, 1.0, p.K0()}; },
          [&](const SlabSlab& s) {
            return slab_reflection(p, s.t1.value, eps_plate);
          },
          [&](const HalfSpaces&) { return halfspace_reflection(p, eps_plate); },
          [&](const FilledGap& f) {
            return filled_gap_reflection(p, f.t.value, eps_plate, eps_gap);
          },
          [&](const FilmInVacuum&) {
            return filled_gap_reflection(p, 0.0, 1.0, eps_gap);
          },
          [&](const ConductiveSheets& s) { return sheet_reflection(p, s.zeta); },
      },
      geometry);
}

const Material* gap_material(const Configuration& config) {
  if (const auto* f = std::get_if<FilledGap>(&config.geometry)) return &f->gap_material;
  if (const auto* f = std::get_if<FilmInVacuum>(&config.geometry)) return &f->film_material;
  return nullptr;
}

double gap_permittivity(const Configuration& config, double k) {
  const Material* m = gap_material(config);
  return m != nullptr ? eps_imag_axis(*m, k) : 1.0;
}

bool uses_plate_material(const Geometry& g) {
  return std::holds_alternative<SlabSlab>(g) ||
         std::holds_alternative<HalfSpaces>(g) ||
         std::holds_alternative<FilledGap>(g);
}

AxisPermittivity permittivities(const Configuration& config, double k) {
  const double plate = uses_plate_material(config.geometry)
                           ? eps_imag_axis(config.plate_material, k)
                           : 1.0;
  return {plate, gap_permittivity(config, k)};
}

GapReflection reflection(const Configuration& config, const AxisPoint& p) {
  const AxisPermittivity eps = permittivities(config, p.k);
  return reflection(config.geometry, p, eps.plate, eps.gap);
}

InverseCharValue inv_f(const Configuration& config, const AxisPoint& p) {
  return inverse_from_reflection(reflection(config, p), config.gap);
}

}  // namespace casimir

// Randomized invariants. Each case draws kDraws configurations from a fixed
// seed; the pressure cases use a coarse grid so the sweep stays fast.
#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/asymptotics.hpp"
#include "casimir/dispersion.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/thermal.hpp"
#include "support.hpp"

using namespace casimir;
using testing::log_uniform;

namespace {

constexpr int kDraws = 1000;

QuadratureSettings coarse() {
  QuadratureSettings q;
  q.n_theta = 48;
  q.n_chi = 192;
  q.n_strip = 16;
  q.rel_tol = 1e-4;
  q.refinement_check = false;
  q.threads = 1;
  return q;
}

Material random_material(std::mt19937_64& rng) {
  const double eps0 = 1.0 + log_uniform(rng, 1e-2, 100.0);
  const double k_r = log_uniform(rng, 1e-3, 1.0);
  const double k_c = std::uniform_real_distribution<double>(0.0, 0.1)(rng) * k_r;
  return single_oscillator(eps0, k_r, k_c);
}

Geometry random_plates(std::mt19937_64& rng) {
  if (std::bernoulli_distribution(0.5)(rng)) return HalfSpaces{};
  const Length t{log_uniform(rng, 0.5, 500.0)};
  return SlabSlab{t, t};
}

}  // namespace

TEST_CASE("inverse characteristic values lie in [0, inf) and vanish at eps = 1") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < kDraws; ++i) {
    const AxisPoint p{log_uniform(rng, 1e-6, 1e2), log_uniform(rng, 1e-6, 1e2)};
    const Length d{log_uniform(rng, 1e-2, 1e4)};
    const double eps = 1.0 + log_uniform(rng, 1e-6, 1e6);
    const auto g = inv_f_halfspace(p, d, eps);
    CHECK(g.g_e >= 0.0);
    CHECK(g.g_h >= 0.0);
    CHECK(std::isfinite(g.sum()));
    const auto s = inv_f_slabs(p, d, Length{log_uniform(rng, 1e-2, 1e3)}, eps);
    CHECK(s.g_e >= 0.0);
    CHECK(s.g_h >= 0.0);
    // 1/(1 - r e) amplifies rounding when r e is close to 1.
    CHECK(s.sum() <= g.sum() * (1.0 + 1e-9));
    CHECK(inv_f_halfspace(p, d, 1.0).sum() == 0.0);
  }
}

TEST_CASE("permittivity on the imaginary axis is real, >= 1 and decreasing") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < kDraws; ++i) {
    const Material m = random_material(rng);
    const double k1 = log_uniform(rng, 1e-6, 1e3);
    const double k2 = k1 * (1.0 + log_uniform(rng, 1e-3, 10.0));
    const double e1 = eps_imag_axis(m, k1);
    const double e2 = eps_imag_axis(m, k2);
    CHECK(e1 >= 1.0);
    CHECK(e2 >= 1.0);
    CHECK(e2 <= e1);
    CHECK(e1 <= eps_static(m));
  }
}

TEST_CASE("mean oscillator energy is even and bounded below by the zero-point value") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < kDraws; ++i) {
    const double w = log_uniform(rng, 1e8, 1e17);
    const Temperature T{log_uniform(rng, 1e-3, 1e4)};
    const double e = mean_oscillator_energy(w, T);
    CHECK(e == mean_oscillator_energy(-w, T));
    CHECK(e >= 0.5 * kCodata.hbar * w * (1.0 - 1e-15));
    CHECK(e >= kCodata.k_B * T.value * (1.0 - 1e-15));
  }
}

TEST_CASE("ideal pressure scales as d^-4") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < kDraws; ++i) {
    const double d = log_uniform(rng, 1e-2, 1e5);
    const double s = log_uniform(rng, 0.1, 10.0);
    const double ratio = casimir_ideal(Length{s * d}).value / casimir_ideal(Length{d}).value;
    CHECK(testing::rel(ratio, std::pow(s, -4.0)) < 1e-13);
  }
}

TEST_CASE("pressure is attractive, bounded by the ideal value and decreasing with distance") {
  std::mt19937_64 rng(15);
  const QuadratureSettings q = coarse();
  for (int i = 0; i < kDraws; ++i) {
    const Material m = random_material(rng);
    const Geometry g = random_plates(rng);
    const double d1 = log_uniform(rng, 0.5, 2000.0);
    const double d2 = d1 * (1.0 + log_uniform(rng, 0.05, 4.0));
    const double p1 = pressure_zero_T({g, m, Length{d1}}, q).pressure.value;
    const double p2 = pressure_zero_T({g, m, Length{d2}}, q).pressure.value;
    INFO("draw " << i << " d1=" << d1 << " d2=" << d2);
    CHECK(p1 < 0.0);
    CHECK(p2 < 0.0);
    CHECK(std::abs(p1) < std::abs(casimir_ideal(Length{d1}).value));
    CHECK(std::abs(p2) < std::abs(p1));
  }
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "casimir/asymptotics.hpp"
#include "casimir/error.hpp"
#include "casimir/quadrature.hpp"
#include "support.hpp"

using namespace casimir;
using testing::rel;

TEST_CASE("ideal Casimir pressure") {
  CHECK(casimir_ideal(Length{10.0}).value == doctest::Approx(-1.300e5).epsilon(1e-3));
  CHECK(casimir_ideal(Length{1000.0}).value == doctest::Approx(-1.300e-3).epsilon(1e-3));
  for (double d : {0.5, 3.0, 10.0, 77.0})
    CHECK(casimir_ideal(Length{2.0 * d}).value == casimir_ideal(Length{d}).value / 16.0);
  CHECK(testing::error_of([] { casimir_ideal(Length{0.0}); }) == ErrorCode::GapZero);
}

TEST_CASE("thin plasma film") {
  CHECK(thin_plasma_film(Length{10.0}).value == doctest::Approx(-1.625e4).epsilon(1e-3));
  CHECK(thin_plasma_film(Length{10.0}).value / casimir_ideal(Length{10.0}).value == 0.125);
  CHECK(testing::error_of([] { thin_plasma_film(Length{-1.0}); }) == ErrorCode::GapZero);
}

TEST_CASE("large-distance dielectric estimate") {
  const RegimeEstimate r = large_d_dielectric(5.6, Length{10.0});
  CHECK(r.pressure.value == doctest::Approx(-1.978e4).epsilon(1e-2));
  CHECK(r.regime == Regime::LargeDDielectric);
  CHECK_FALSE(r.validity_note.empty());

  const double pc = -3.0 * kCodata.hbar_c() * 1e36 / (8.0 * std::numbers::pi * std::numbers::pi * 1e4);
  CHECK(rel(large_d_dielectric(1e16, Length{10.0}).pressure.value, pc) < 1e-7);
  CHECK(std::abs(large_d_dielectric(1.0 + 1e-10, Length{10.0}).pressure.value) < 1e-12);
  CHECK(testing::error_of([] { large_d_dielectric(1.0, Length{10.0}); }) == ErrorCode::EpsAtMostOne);
  CHECK(testing::error_of([] { large_d_dielectric(2.0, Length{0.0}); }) == ErrorCode::GapZero);

  const RegimeEstimate inside = large_d_dielectric(37.98, Length{1000.0}, 0.08);
  CHECK(inside.validity_note.find("within") != std::string::npos);
  const RegimeEstimate outside = large_d_dielectric(37.98, Length{10.0}, 0.08);
  CHECK(outside.validity_note.find("outside") != std::string::npos);
}

TEST_CASE("small-distance estimate scales as 1/d^3") {
  const Material m = single_oscillator(5.6, 0.002);
  const double a = std::abs(small_d_lifshitz(m, Length{2.0}).value) * 8.0;
  const double b = std::abs(small_d_lifshitz(m, Length{4.0}).value) * 64.0;
  const double c = std::abs(small_d_lifshitz(m, Length{8.0}).value) * 512.0;
  CHECK(rel(a, b) < 0.05);
  CHECK(rel(b, c) < 0.05);
  CHECK(rel(a, c) < 0.05);
  CHECK(small_d_lifshitz(vacuum_material(), Length{2.0}).value == 0.0);
  const double weak = small_d_lifshitz(single_oscillator(1.0 + 1e-9, 0.002), Length{2.0}).value;
  CHECK(std::abs(weak) < 1e-12 * a);
  CHECK(testing::error_of([] { small_d_lifshitz(default_material(true), Length{2.0}); }) ==
        ErrorCode::DrudeAtZero);
}

TEST_CASE("estimates stay below the ideal bound") {
  for (double d : {1.0, 5.0, 50.0, 500.0}) {
    const double bound = std::abs(casimir_ideal(Length{d}).value);
    CHECK(std::abs(thin_plasma_film(Length{d}).value) < bound);
    CHECK(std::abs(large_d_dielectric(37.98, Length{d}).pressure.value) < bound);
    CHECK(std::abs(small_d_lifshitz(default_material(), Length{d}).value) < bound);
  }
}

TEST_CASE("small-distance estimate against the full quadrature") {
  const Material m = default_material();
  const auto full = [&](double d) {
    return std::abs(pressure_zero_T({HalfSpaces{}, m, Length{d}}).pressure.value);
  };
  // Retardation weakens the full result below the non-retarded estimate at
  // 5 nm; the two merge as d shrinks.
  const double p5 = full(5.0);
  const double s5 = std::abs(small_d_lifshitz(m, Length{5.0}).value);
  CHECK(p5 < s5);
  CHECK(s5 < std::abs(casimir_ideal(Length{5.0}).value));
  CHECK(rel(full(1.0), std::abs(small_d_lifshitz(m, Length{1.0}).value)) < 0.02);
  CHECK(rel(full(1.0), std::abs(small_d_lifshitz(m, Length{1.0}).value)) < rel(p5, s5));
}

TEST_CASE("regime handoff") {
  const Material m = default_material();
  const auto p = [&](double d) {
    return std::abs(pressure_zero_T({HalfSpaces{}, m, Length{d}}).pressure.value);
  };
  // Every k_r d >= 10 at 1000 nm.
  const double est = std::abs(large_d_dielectric(eps_static(m), Length{1000.0}).pressure.value);
  CHECK(rel(p(1000.0), est) < 0.1);
  const double slope = std::log(p(80.0) / p(20.0)) / std::log(4.0);
  CHECK(slope < -3.0);
  CHECK(slope > -4.0);
}

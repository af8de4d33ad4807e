#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/configuration.hpp"
#include "casimir/error.hpp"
#include "casimir/permittivity.hpp"
#include "casimir/units.hpp"
#include "support.hpp"

using namespace casimir;

TEST_CASE("prefactor reproduces the ideal Casimir magnitude at 10 nm") {
  // prefactor is hbar c / (2 pi^2); the ideal result is pi^2 hbar c / (240 d^4)
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double d = 10.0;
  const double p = unit_pressure_prefactor(Length{d}) * 2.0 * pi2 * pi2 / (240.0 * std::pow(d, 4));
  CHECK(testing::rel(p, 1.300125772e5) < 1e-8);
}

TEST_CASE("prefactor carries no gap or material dependence") {
  CHECK(unit_pressure_prefactor(Length{10.0}) == unit_pressure_prefactor(Length{20.0}));
  CHECK(unit_pressure_prefactor(Length{1.0}) == unit_pressure_prefactor(Length{1000.0}));
  CHECK(unit_pressure_prefactor(Length{1.0}) > 0.0);
}

TEST_CASE("prefactor follows the constants it is given") {
  PhysicalConstants doubled = kCodata;
  doubled.hbar *= 2.0;
  CHECK(unit_pressure_prefactor(Length{1.0}, doubled) ==
        doctest::Approx(2.0 * unit_pressure_prefactor(Length{1.0})).epsilon(1e-15));
}

TEST_CASE("wavenumber unit round trip") {
  for (double k : {1e-9, 0.05, 1.0, 37.5, 1e6}) {
    const double back = per_metre_to_per_nm(per_nm_to_per_metre(k));
    CHECK(std::abs(back - k) <= std::abs(k) * 2.3e-16);
  }
}

TEST_CASE("value types compare by value") {
  CHECK(Length{1.0} == Length{1.0});
  CHECK(Length{1.0} < Length{2.0});
  CHECK(Pressure{-1.0} < Pressure{0.0});
  const Configuration a{HalfSpaces{}, default_material(), Length{10.0}};
  Configuration b = a;
  CHECK(a == b);
  b.gap = Length{11.0};
  CHECK_FALSE(a == b);
}

TEST_CASE("thermal wavenumber at 300 K") {
  // k_B T / (hbar c) = 1.3101e5 1/m
  CHECK(thermal_wavenumber(Temperature{300.0}) == doctest::Approx(1.31008e-4).epsilon(1e-4));
}

TEST_CASE("configuration validation") {
  const Material m = default_material();
  CHECK(testing::error_of([&] { validate(Configuration{HalfSpaces{}, m, Length{0.0}}); }) ==
        ErrorCode::GapZero);
  CHECK(testing::error_of([&] { validate(Configuration{HalfSpaces{}, m, Length{-1.0}}); }) ==
        ErrorCode::GapZero);
  CHECK(testing::error_of([&] { validate(Configuration{HalfSpaces{}, m, Length{1e-4}}); }) ==
        ErrorCode::GapZero);
  CHECK(testing::error_of([&] {
          validate(Configuration{SlabSlab{Length{0.0}, Length{0.0}}, m, Length{1.0}});
        }) == ErrorCode::InvalidArgument);
  CHECK(testing::error_of([&] {
          validate(Configuration{SlabSlab{Length{1.0}, Length{2.0}}, m, Length{1.0}});
        }) == ErrorCode::UnsupportedGeometry);
  CHECK(testing::error_of([&] {
          validate(Configuration{ConductiveSheets{0.0}, vacuum_material(), Length{1.0}});
        }) == ErrorCode::InvalidArgument);
  CHECK_NOTHROW(validate(Configuration{HalfSpaces{}, m, Length{1e-3}}));
}

TEST_CASE("gap-zero message names the divergence") {
  try {
    throw_gap_zero(0.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GapZero);
    CHECK(std::string(e.what()).find("logarithmically diverging") != std::string::npos);
  }
}

TEST_CASE("spectral edges of the default material") {
  const Configuration c{HalfSpaces{}, default_material(), Length{10.0}};
  CHECK(max_resonance(c) == doctest::Approx(0.08));
  const auto e = spectral_edges(c);
  CHECK(e.front() == doctest::Approx(1e-6));
  CHECK(e.back() == doctest::Approx(0.08));
  CHECK(std::is_sorted(e.begin(), e.end()));
}

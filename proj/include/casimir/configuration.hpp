#pragma once

#include <string_view>
#include <variant>

#include "casimir/permittivity.hpp"
#include "casimir/units.hpp"

namespace casimir {

/// Perfectly conducting plates; the plate material is ignored.
struct IdealCasimir {
  bool operator==(const IdealCasimir&) const = default;
};

/// Two plates of thickness t1, t2 in vacuum. Only t1 == t2 is supported.
struct SlabSlab {
  Length t1;
  Length t2;
  bool operator==(const SlabSlab&) const = default;
};

/// Two semi-infinite dielectrics (the Lifshitz configuration).
struct HalfSpaces {
  bool operator==(const HalfSpaces&) const = default;
};

/// Two plates of thickness t with the gap filled by gap_material.
struct FilledGap {
  Length t;
  Material gap_material;
  bool operator==(const FilledGap&) const = default;
};

/// A film of thickness d (the configuration gap) in vacuum.
struct FilmInVacuum {
  Material film_material;
  bool operator==(const FilmInVacuum&) const = default;
};

/// Two freestanding sheets with normalized conductivity zeta.
struct ConductiveSheets {
  double zeta{};
  bool operator==(const ConductiveSheets&) const = default;
};

using Geometry = std::variant<IdealCasimir, SlabSlab, HalfSpaces, FilledGap,
                              FilmInVacuum, ConductiveSheets>;

std::string_view geometry_name(const Geometry& geometry);

struct Configuration {
  Geometry geometry;
  Material plate_material;
  Length gap;
  bool operator==(const Configuration&) const = default;
};

/// Smallest admissible gap; below this the continuum model is meaningless
/// and the integral cost grows like 1/d.
inline constexpr double kMinimumGapNm = 1e-3;

/// Throws GapZero, UnsupportedGeometry or InvalidArgument.
void validate(const Configuration& config);

/// Largest resonance over every material that enters the integrand.
double max_resonance(const Configuration& config);

/// Sorted positive spectral edges over every material in the integrand.
std::vector<double> spectral_edges(const Configuration& config);

}  // namespace casimir

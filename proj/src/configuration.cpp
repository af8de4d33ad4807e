#include "casimir/configuration.hpp"

#include <algorithm>
#include <sstream>

#include "casimir/detail/overloaded.hpp"
#include "casimir/error.hpp"

namespace casimir {

using detail::overloaded;

std::string_view geometry_name(const Geometry& geometry) {
  return std::visit(
      overloaded{
          [](const IdealCasimir&) { return std::string_view("ideal"); },
          [](const SlabSlab&) { return std::string_view("slabs"); },
          [](const HalfSpaces&) { return std::string_view("halfspaces"); },
          [](const FilledGap&) { return std::string_view("filled_gap"); },
          [](const FilmInVacuum&) { return std::string_view("film"); },
          [](const ConductiveSheets&) { return std::string_view("sheets"); },
      },
      geometry);
}

void validate(const Configuration& config) {
  const double d = config.gap.value;
  if (!(d > 0.0)) throw_gap_zero(d);
  if (d < kMinimumGapNm) {
    std::ostringstream os;
    os << "gap d = " << d << " nm is below " << kMinimumGapNm
       << " nm; the integral approaches the logarithmically diverging d = 0 "
          "limit and the continuum model is no longer applicable";
    throw Error(ErrorCode::GapZero, os.str());
  }
  check_material(config.plate_material);
  std::visit(
      overloaded{
          [](const IdealCasimir&) {},
          [](const HalfSpaces&) {},
          [](const SlabSlab& s) {
            if (!(s.t1.value > 0.0) || !(s.t2.value > 0.0))
              throw Error(ErrorCode::InvalidArgument,
                          "slab thicknesses must be > 0");
            if (s.t1 != s.t2)
              throw Error(ErrorCode::UnsupportedGeometry,
                          "unequal slab thicknesses are not supported");
          },
          [](const FilledGap& f) {
            if (!(f.t.value > 0.0))
              throw Error(ErrorCode::InvalidArgument,
                          "plate thickness must be > 0");
            check_material(f.gap_material);
          },
          [](const FilmInVacuum& f) { check_material(f.film_material); },
          [](const ConductiveSheets& s) {
            if (!(s.zeta > 0.0))
              throw Error(ErrorCode::InvalidArgument,
                          "sheet conductivity zeta must be > 0");
          },
      },
      config.geometry);
}

double max_resonance(const Configuration& config) {
  return std::visit(
      overloaded{
          [](const IdealCasimir&) { return 0.0; },
          [](const ConductiveSheets&) { return 0.0; },
          [&](const FilledGap& f) {
            return std::max(config.plate_material.max_resonance(),
                            f.gap_material.max_resonance());
          },
          [](const FilmInVacuum& f) { return f.film_material.max_resonance(); },
          [&](const auto&) { return config.plate_material.max_resonance(); },
      },
      config.geometry);
}

std::vector<double> spectral_edges(const Configuration& config) {
  std::vector<double> edges = std::visit(
      overloaded{
          [](const IdealCasimir&) { return std::vector<double>{}; },
          [](const ConductiveSheets&) { return std::vector<double>{}; },
          [&](const FilledGap& f) {
            auto e = config.plate_material.spectral_edges();
            auto g = f.gap_material.spectral_edges();
            e.insert(e.end(), g.begin(), g.end());
            return e;
          },
          [](const FilmInVacuum& f) { return f.film_material.spectral_edges(); },
          [&](const auto&) { return config.plate_material.spectral_edges(); },
      },
      config.geometry);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace casimir

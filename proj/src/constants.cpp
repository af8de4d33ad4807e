#include "casimir/error.hpp"
#include "casimir/units.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace casimir {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::GapZero: return "GapZero";
    case ErrorCode::DrudeAtZero: return "DrudeAtZero";
    case ErrorCode::CMDenominatorNonpositive: return "CMDenominatorNonpositive";
    case ErrorCode::BoundDenominatorNonpositive: return "BoundDenominatorNonpositive";
    case ErrorCode::DegenerateBracket: return "DegenerateBracket";
    case ErrorCode::NonConvergent: return "NonConvergent";
    case ErrorCode::PhiDenominatorZero: return "PhiDenominatorZero";
    case ErrorCode::ZeroFreqUndefined: return "ZeroFreqUndefined";
    case ErrorCode::EpsAtMostOne: return "EpsAtMostOne";
    case ErrorCode::UnsupportedGeometry: return "UnsupportedGeometry";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

void throw_gap_zero(double d_nm) {
  std::ostringstream os;
  os << "gap d = " << d_nm
     << " nm: the pressure integral is logarithmically diverging at zero gap "
        "(exp(2 K0 d) no longer damps large wavenumbers)";
  throw Error(ErrorCode::GapZero, os.str());
}

double unit_pressure_prefactor(Length /*d*/, const PhysicalConstants& constants) {
  const double nm4_to_m4 = std::pow(kNmPerMetre, 4);
  return constants.hbar_c() / (2.0 * std::numbers::pi * std::numbers::pi) *
         nm4_to_m4;
}

double thermal_wavenumber(Temperature T, const PhysicalConstants& constants) {
  return per_metre_to_per_nm(constants.k_B * T.value / constants.hbar_c());
}

}  // namespace casimir

#include "casnuc/units.hpp"

#include <string>

#include "casnuc/errors.hpp"

namespace casnuc {

Dimension dimension_of(Unit u) noexcept {
  switch (u) {
    case Unit::J:
    case Unit::MeV:
    case Unit::eV:
      return Dimension::energy;
    case Unit::m:
    case Unit::fm:
      return Dimension::length;
    case Unit::K:
      return Dimension::temperature;
    case Unit::J_m:
    case Unit::MeV_fm:
      return Dimension::energy_length;
  }
  return Dimension::energy;
}

double si_factor(Unit u) noexcept {
  constexpr double eV = 1.602176634e-19;
  switch (u) {
    case Unit::J:
    case Unit::m:
    case Unit::K:
    case Unit::J_m:
      return 1.0;
    case Unit::MeV:
      return si::MeV;
    case Unit::eV:
      return eV;
    case Unit::fm:
      return si::fm;
    case Unit::MeV_fm:
      return si::MeV * si::fm;
  }
  return 1.0;
}

Unit parse_unit(std::string_view tag) {
  if (tag == "J") return Unit::J;
  if (tag == "MeV") return Unit::MeV;
  if (tag == "eV") return Unit::eV;
  if (tag == "m") return Unit::m;
  if (tag == "fm") return Unit::fm;
  if (tag == "K") return Unit::K;
  if (tag == "J*m" || tag == "J\xC2\xB7m" || tag == "J.m") return Unit::J_m;
  if (tag == "MeV*fm" || tag == "MeV\xC2\xB7" "fm" || tag == "MeV.fm") return Unit::MeV_fm;
  throw DomainError("unknown unit tag: " + std::string(tag));
}

std::string_view unit_name(Unit u) noexcept {
  switch (u) {
    case Unit::J: return "J";
    case Unit::MeV: return "MeV";
    case Unit::eV: return "eV";
    case Unit::m: return "m";
    case Unit::fm: return "fm";
    case Unit::K: return "K";
    case Unit::J_m: return "J*m";
    case Unit::MeV_fm: return "MeV*fm";
  }
  return "?";
}

double convert(double value, Unit from, Unit to) {
  if (dimension_of(from) != dimension_of(to)) {
    throw DomainError("incompatible units: " + std::string(unit_name(from)) +
                      " -> " + std::string(unit_name(to)));
  }
  if (from == to) return value;
  return value * (si_factor(from) / si_factor(to));
}

}  // namespace casnuc

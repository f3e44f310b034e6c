#pragma once

#include <string_view>

namespace casnuc {

enum class Unit { J, MeV, eV, m, fm, K, J_m, MeV_fm };

enum class Dimension { energy, length, temperature, energy_length };

Dimension dimension_of(Unit u) noexcept;

// SI value of one unit of `u`.
double si_factor(Unit u) noexcept;

// Accepts "J", "MeV", "eV", "m", "fm", "K", and the products "J*m" / "J·m",
// "MeV*fm" / "MeV·fm". Throws DomainError on anything else.
Unit parse_unit(std::string_view tag);

std::string_view unit_name(Unit u) noexcept;

// Linear conversion between units of the same dimension. Throws
// DomainError when the dimensions differ.
double convert(double value, Unit from, Unit to);

namespace si {
inline constexpr double fm = 1e-15;
inline constexpr double MeV = 1.602176634e-13;
}  // namespace si

}  // namespace casnuc

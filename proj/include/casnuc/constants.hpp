#pragma once

namespace casnuc {

/// CODATA-2018 recommended values, SI units. mu_B = e hbar / 2 m_e; the
/// tabulated 9.2740100783e-24 differs by 6e-10.
struct PhysicalConstants {
  double hbar;   // J s
  double c;      // m/s
  double k_B;    // J/K
  double e;      // C
  double m_e;    // kg
  double eps0;   // F/m
  double mu0;    // H/m
  double mu_B;   // J/T
  double zeta3;  // Apery's constant
};

inline constexpr PhysicalConstants kConstants{
    .hbar = 1.054571817e-34,
    .c = 299792458.0,
    .k_B = 1.380649e-23,
    .e = 1.602176634e-19,
    .m_e = 9.1093837015e-31,
    .eps0 = 8.8541878128e-12,
    .mu0 = 1.25663706212e-6,
    .mu_B = 1.602176634e-19 * 1.054571817e-34 / (2.0 * 9.1093837015e-31),
    .zeta3 = 1.2020569031595942854,
};

inline constexpr const char* kConstantsVintage = "CODATA-2018";

constexpr const PhysicalConstants& constants() noexcept { return kConstants; }

}  // namespace casnuc

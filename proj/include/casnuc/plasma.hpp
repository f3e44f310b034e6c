#pragma once

// Thermodynamics of the electron-positron plasma generated between two
// nuclear-scale plates, and its magnetic permeability models.
//
// The gap temperature follows from balancing the zero-temperature Casimir
// energy against black-body radiation energy filling the gap volume; the
// pair density is the ultra-relativistic (k_B T >> m_e c^2) Fermi gas
// result. All quantities are SI.

namespace casnuc {

// How the pair density enters the spin susceptibility.
//
// table_consistent: chi = 2 mu0 rho mu_B^2 / (k_B T), rho the total e-/e+
//   density. This is the form whose distance dependence matches the
//   closed-form permeability column and the tabulated values (360.8 at 1 fm).
// equation_literal: chi = mu0 rho mu_B^2 / (k_B T), i.e. two species of
//   density N = rho/2 each contributing mu0 N mu_B^2 / (k_B T).
enum class PermeabilityConvention { table_consistent, equation_literal };

struct PermeabilityModel {
  enum class Kind { unity, static_spin, dynamic, field_dependent };

  Kind kind = Kind::static_spin;
  PermeabilityConvention convention = PermeabilityConvention::table_consistent;
  double omega_mu = 1e10;  // rad/s, magnetic proper frequency (dynamic)
  double H = 0.0;          // A/m (field_dependent)
  double mu_bar = 0.0;     // J/T dipole moment; 0 selects mu_B (field_dependent)

  static PermeabilityModel unity() { return {.kind = Kind::unity}; }
  static PermeabilityModel spin(
      PermeabilityConvention conv = PermeabilityConvention::table_consistent) {
    return {.kind = Kind::static_spin, .convention = conv};
  }
  static PermeabilityModel dynamic(double omega_mu = 1e10) {
    return {.kind = Kind::dynamic, .omega_mu = omega_mu};
  }
  static PermeabilityModel field(double H) {
    return {.kind = Kind::field_dependent, .H = H};
  }

  // Throws DomainError when the kind-specific parameters are invalid.
  void validate() const;
};

const char* to_string(PermeabilityModel::Kind kind) noexcept;
const char* to_string(PermeabilityConvention convention) noexcept;

// One point of the distance-coupled plasma: gap width and the resulting
// temperature, density, plasma frequency and static permeability.
struct PlasmaState {
  double L;         // m
  double T;         // K
  double rho;       // m^-3, e- plus e+
  double omega_ep;  // rad/s
  double mu_ep;     // static relative permeability
};

// Black-body balance: T = hbar c / (k_B gamma L), gamma = 48^(1/4).
double temperature_from_distance(double L);

// Same balance expressed through the ideal Casimir pressure magnitude.
double temperature_from_force(double force_per_area);

// Total e-/e+ density of an ultra-relativistic pair gas at temperature T.
double pair_density(double T);

// pair_density(temperature_from_distance(L)) in closed form:
// rho = 3^(1/4) zeta(3) / (8 pi^2 L^3).
double density_from_distance(double L);

double plasma_frequency(double rho);

// Closed-form distance expressions for omega_ep and the table-consistent
// mu_ep, used to cross-check the composed pipeline.
double plasma_frequency_from_distance(double L);
double permeability_from_distance(double L);

// coth(y) - 1/y, with a series branch for |y| < kLangevinSwitch.
inline constexpr double kLangevinSwitch = 0.05;
double langevin(double y);

double lande_g(double S, double Lq, double J);

// Curie susceptibility chi = mu0 N mu_bar^2 / (3 k_B T).
double spin_susceptibility(double N, double mu_bar, double T);

// Effective moment g mu_B sqrt(J(J+1)).
double effective_moment(double g, double J);

double pair_permeability_static(
    double rho_total, double T,
    PermeabilityConvention convention = PermeabilityConvention::table_consistent);

// mu(i xi) = 1 + (mu_static - 1) / (1 + xi^2 / omega_mu^2).
double pair_permeability_dynamic(
    double xi, double rho_total, double T, double omega_mu = 1e10,
    PermeabilityConvention convention = PermeabilityConvention::table_consistent);

// mu(H) = 1 + 6 N mu_bar L(y) / H with y = mu_bar mu0 H / (k_B T).
// For H -> 0 this tends to 1 + 2 mu0 N mu_bar^2 / (k_B T).
double pair_permeability_in_field(double H, double N, double mu_bar, double T);

// Static (zero-frequency) permeability of the plasma at (rho, T) under the
// given model. For field_dependent the per-moment density N is rho under the
// table-consistent convention and rho/2 under the literal one, so the
// zero-field limit coincides with pair_permeability_static.
double static_permeability(const PermeabilityModel& model, double rho, double T);

// Permeability at imaginary frequency xi used for the n > 0 Matsubara terms.
// Only the dynamic model departs from 1 there.
double finite_frequency_permeability(const PermeabilityModel& model, double xi,
                                     double rho, double T);

PlasmaState plasma_state_from_temperature(double T, double L,
                                          const PermeabilityModel& model);
PlasmaState plasma_state_from_distance(double L, const PermeabilityModel& model);

}  // namespace casnuc

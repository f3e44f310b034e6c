#include "casnuc/plasma.hpp"

#include <cmath>
#include <numbers>

#include "casnuc/constants.hpp"
#include "casnuc/errors.hpp"

namespace casnuc {

using detail::require;
using std::numbers::pi;

namespace {

const PhysicalConstants& K = kConstants;

// gamma = 48^(1/4)
const double kGamma = std::pow(48.0, 0.25);

double effective_mu_bar(const PermeabilityModel& model) {
  return model.mu_bar > 0.0 ? model.mu_bar : K.mu_B;
}

double spin_moment_density(double rho, PermeabilityConvention convention) {
  return convention == PermeabilityConvention::table_consistent ? rho : 0.5 * rho;
}

}  // namespace

void PermeabilityModel::validate() const {
  switch (kind) {
    case Kind::unity:
    case Kind::static_spin:
      return;
    case Kind::dynamic:
      require(omega_mu > 0.0 && std::isfinite(omega_mu),
              "dynamic permeability needs omega_mu > 0");
      return;
    case Kind::field_dependent:
      require(H >= 0.0 && std::isfinite(H), "field-dependent permeability needs H >= 0");
      require(mu_bar >= 0.0 && std::isfinite(mu_bar), "mu_bar must be non-negative");
      return;
  }
}

const char* to_string(PermeabilityModel::Kind kind) noexcept {
  switch (kind) {
    case PermeabilityModel::Kind::unity: return "unity";
    case PermeabilityModel::Kind::static_spin: return "spin";
    case PermeabilityModel::Kind::dynamic: return "dynamic";
    case PermeabilityModel::Kind::field_dependent: return "field";
  }
  return "?";
}

const char* to_string(PermeabilityConvention convention) noexcept {
  return convention == PermeabilityConvention::table_consistent ? "table" : "literal";
}

double temperature_from_distance(double L) {
  require(L > 0.0, "temperature_from_distance: L must be positive");
  return K.hbar * K.c / (K.k_B * kGamma * L);
}

double temperature_from_force(double force_per_area) {
  require(force_per_area > 0.0, "temperature_from_force: force per area must be positive");
  const double hc = K.hbar * K.c;
  return std::pow(5.0 * hc * hc * hc * force_per_area /
                      (pi * pi * std::pow(K.k_B, 4)),
                  0.25);
}

double pair_density(double T) {
  require(T > 0.0, "pair_density: T must be positive");
  const double x = K.k_B * T / (K.hbar * K.c);
  return 3.0 * K.zeta3 / (pi * pi) * x * x * x;
}

double density_from_distance(double L) {
  require(L > 0.0, "density_from_distance: L must be positive");
  return std::pow(3.0, 0.25) * K.zeta3 / (8.0 * pi * pi * L * L * L);
}

double plasma_frequency(double rho) {
  require(rho >= 0.0, "plasma_frequency: density must be non-negative");
  return std::sqrt(rho * K.e * K.e / (K.eps0 * K.m_e));
}

double plasma_frequency_from_distance(double L) {
  require(L > 0.0, "plasma_frequency_from_distance: L must be positive");
  return std::pow(3.0, 0.125) / (2.0 * pi) *
         std::sqrt(K.e * K.e * K.zeta3 / (2.0 * K.m_e * K.eps0 * L * L * L));
}

double permeability_from_distance(double L) {
  require(L > 0.0, "permeability_from_distance: L must be positive");
  return 1.0 + std::sqrt(3.0) * K.mu0 * K.e * K.e * K.hbar * K.zeta3 /
                   (8.0 * pi * pi * L * L * K.m_e * K.m_e * K.c);
}

namespace {

// L(y)/y through the y^8 term.
double langevin_over_y_series(double y2) {
  return 1.0 / 3.0 -
         y2 * (1.0 / 45.0 - y2 * (2.0 / 945.0 - y2 * (1.0 / 4725.0 - y2 * (2.0 / 93555.0))));
}

}  // namespace

double langevin(double y) {
  if (std::abs(y) < kLangevinSwitch) return y * langevin_over_y_series(y * y);
  if (std::abs(y) > 20.0) return std::copysign(1.0, y) - 1.0 / y;  // coth(y) == +-1 in double
  return 1.0 / std::tanh(y) - 1.0 / y;
}

double lande_g(double S, double Lq, double J) {
  require(J > 0.0, "lande_g: J must be positive");
  require(S >= 0.0 && Lq >= 0.0, "lande_g: S and L must be non-negative");
  const double jj = J * (J + 1.0);
  return 1.0 + (jj + S * (S + 1.0) - Lq * (Lq + 1.0)) / (2.0 * jj);
}

double spin_susceptibility(double N, double mu_bar, double T) {
  require(T > 0.0, "spin_susceptibility: T must be positive");
  require(N >= 0.0, "spin_susceptibility: N must be non-negative");
  return K.mu0 * N * mu_bar * mu_bar / (3.0 * K.k_B * T);
}

double effective_moment(double g, double J) {
  require(J >= 0.0, "effective_moment: J must be non-negative");
  return g * K.mu_B * std::sqrt(J * (J + 1.0));
}

double pair_permeability_static(double rho_total, double T,
                                PermeabilityConvention convention) {
  require(T > 0.0, "pair_permeability_static: T must be positive");
  require(rho_total >= 0.0, "pair_permeability_static: density must be non-negative");
  // Each species (g = 2, J = 1/2) has chi = mu0 N mu_B^2 / (k_B T).
  const double per_species = convention == PermeabilityConvention::table_consistent
                                 ? rho_total
                                 : 0.5 * rho_total;
  return 1.0 + 2.0 * K.mu0 * per_species * K.mu_B * K.mu_B / (K.k_B * T);
}

double pair_permeability_dynamic(double xi, double rho_total, double T, double omega_mu,
                                 PermeabilityConvention convention) {
  require(xi >= 0.0, "pair_permeability_dynamic: xi must be non-negative");
  require(omega_mu > 0.0, "pair_permeability_dynamic: omega_mu must be positive");
  const double chi0 = pair_permeability_static(rho_total, T, convention) - 1.0;
  const double r = xi / omega_mu;
  return 1.0 + chi0 / (1.0 + r * r);
}

double pair_permeability_in_field(double H, double N, double mu_bar, double T) {
  require(H > 0.0, "pair_permeability_in_field: H must be positive");
  require(T > 0.0, "pair_permeability_in_field: T must be positive");
  require(N >= 0.0, "pair_permeability_in_field: N must be non-negative");
  const double y = mu_bar * K.mu0 * H / (K.k_B * T);
  if (std::abs(y) < kLangevinSwitch) {
    // 6 N mu_bar L(y) / H with L(y)/y expanded, avoiding the 1/H underflow path.
    const double l_over_y = langevin_over_y_series(y * y);
    return 1.0 + 6.0 * N * mu_bar * l_over_y * mu_bar * K.mu0 / (K.k_B * T);
  }
  return 1.0 + 6.0 * N * mu_bar * langevin(y) / H;
}

double static_permeability(const PermeabilityModel& model, double rho, double T) {
  model.validate();
  switch (model.kind) {
    case PermeabilityModel::Kind::unity:
      return 1.0;
    case PermeabilityModel::Kind::static_spin:
    case PermeabilityModel::Kind::dynamic:
      return pair_permeability_static(rho, T, model.convention);
    case PermeabilityModel::Kind::field_dependent:
      if (model.H == 0.0) return pair_permeability_static(rho, T, model.convention);
      return pair_permeability_in_field(model.H, spin_moment_density(rho, model.convention),
                                        effective_mu_bar(model), T);
  }
  return 1.0;
}

double finite_frequency_permeability(const PermeabilityModel& model, double xi,
                                     double rho, double T) {
  if (model.kind != PermeabilityModel::Kind::dynamic) return 1.0;
  return pair_permeability_dynamic(xi, rho, T, model.omega_mu, model.convention);
}

PlasmaState plasma_state_from_temperature(double T, double L,
                                          const PermeabilityModel& model) {
  require(L > 0.0, "plasma state: L must be positive");
  const double rho = pair_density(T);
  return {.L = L,
          .T = T,
          .rho = rho,
          .omega_ep = plasma_frequency(rho),
          .mu_ep = static_permeability(model, rho, T)};
}

PlasmaState plasma_state_from_distance(double L, const PermeabilityModel& model) {
  return plasma_state_from_temperature(temperature_from_distance(L), L, model);
}

}  // namespace casnuc

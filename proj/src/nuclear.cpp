#include "casnuc/nuclear.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "casnuc/constants.hpp"
#include "casnuc/errors.hpp"
#include "casnuc/lifshitz.hpp"

namespace casnuc {

using detail::require;
using std::numbers::pi;

namespace {
const PhysicalConstants& K = kConstants;
}

CasimirEnergyForce ideal_casimir(double L, double area) {
  require(L > 0.0, "ideal_casimir: L must be positive");
  require(area > 0.0, "ideal_casimir: area must be positive");
  const double hc = K.hbar * K.c;
  const double L3 = L * L * L;
  return {.energy = -pi * pi * hc * area / (720.0 * L3),
          .force = -pi * pi * hc * area / (240.0 * L3 * L)};
}

double blackbody_energy(double T, double volume) {
  require(T >= 0.0, "blackbody_energy: T must be non-negative");
  require(volume >= 0.0, "blackbody_energy: volume must be non-negative");
  const double x = K.k_B * T;
  const double hc = K.hbar * K.c;
  return pi * pi / 15.0 * (x * x * x * x) / (hc * hc * hc) * volume;
}

double coulomb_energy(double R, double L) {
  require(R > 0.0, "coulomb_energy: R must be positive");
  require(L >= 0.0, "coulomb_energy: L must be non-negative");
  return K.e * K.e / (4.0 * pi * K.eps0 * (2.0 * R + L));
}

CubicRoots solve_depressed_cubic(double p, double q) {
  // Discriminant in Cardano form: (q/2)^2 + (p/3)^3.
  const double half_q = 0.5 * q;
  const double third_p = p / 3.0;
  const double disc = half_q * half_q + third_p * third_p * third_p;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    return {.largest = std::cbrt(-half_q + s) + std::cbrt(-half_q - s), .trigonometric = false};
  }
  // Three real roots; p < 0 here.
  const double m = 2.0 * std::sqrt(-third_p);
  const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
  const double theta = std::acos(arg) / 3.0;
  return {.largest = m * std::cos(theta), .trigonometric = true};
}

double equilibrium_coefficient() {
  return std::pow(pi, 4) * K.eps0 * K.hbar * K.c / (180.0 * K.e * K.e);
}

EquilibriumResult equilibrium_distance(double R) {
  require(R > 0.0 && std::isfinite(R), "equilibrium_distance: R must be positive");
  const double D = equilibrium_coefficient();
  auto cubic = [D](double x) { return x * x * x - D * x - 2.0 * D; };
  const CubicRoots roots = solve_depressed_cubic(-D, -2.0 * D);
  const double xb = bisect(cubic, 0.0, 10.0);
  return {.D = D,
          .x_tilde = roots.largest,
          .x_bisection = xb,
          .L_eq = roots.largest * R,
          .residual = cubic(roots.largest),
          .trigonometric = roots.trigonometric};
}

double meson_mass(double rho, double mu_ep) {
  require(rho >= 0.0, "meson_mass: rho must be non-negative");
  require(mu_ep >= 1.0, "meson_mass: mu_ep must be >= 1");
  return 2.0 * K.hbar * std::sqrt(mu_ep) * plasma_frequency(rho);
}

double screening_length(double mass_energy) {
  require(mass_energy > 0.0, "screening_length: mass energy must be positive");
  return K.hbar * K.c / mass_energy;
}

YukawaQuantities yukawa_quantities(const PlasmaState& s) {
  const double m = meson_mass(s.rho, s.mu_ep);
  return {.meson_mass_energy = m,
          .screening_length = screening_length(m),
          .kappa_source = screening_wavevector(s)};
}

FermiQuantities fermi_quantities(double n) {
  require(n > 0.0, "fermi_quantities: n must be positive");
  const double q = std::cbrt(3.0 * pi * pi * n);
  return {.eps_F = K.hbar * K.hbar * q * q / (2.0 * K.m_e), .q_F = q};
}

PlasmonLinewidth plasmon_linewidth(double n, double q_ratio) {
  require(n > 0.0, "plasmon_linewidth: n must be positive");
  require(q_ratio >= 0.0, "plasmon_linewidth: q_ratio must be non-negative");
  const FermiQuantities f = fermi_quantities(n);
  const double z = K.hbar * plasma_frequency(n) / (2.0 * f.eps_F);
  const double bracket = 10.0 * std::numbers::ln2 + 2.0 - 4.5 * z;
  // (6 pi eps_F / (5 hbar)) is a rate; times hbar gives the energy width.
  const double delta = 6.0 * pi * f.eps_F / 5.0 * q_ratio * q_ratio * z * z * z * bracket;
  return {.delta_E = delta, .ratio = z, .bracket = bracket, .within_validity = bracket > 0.0};
}

}  // namespace casnuc

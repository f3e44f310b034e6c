#pragma once

// Nuclear-scale energetics: ideal Casimir plates, black-body energy in the
// gap, the Casimir-Coulomb equilibrium between two protons, and the
// Yukawa-analogy quantities of the screened zero-frequency term.

#include "casnuc/plasma.hpp"

namespace casnuc {

struct CasimirEnergyForce {
  double energy;  // J
  double force;   // N
};

// E = -pi^2 hbar c A / (720 L^3), F = -pi^2 hbar c A / (240 L^4).
CasimirEnergyForce ideal_casimir(double L, double area);

// (pi^2/15) (k_B T)^4 / (hbar c)^3 * volume.
double blackbody_energy(double T, double volume);

// e^2 / (4 pi eps0 (2R + L)).
double coulomb_energy(double R, double L);

// Real roots of the depressed cubic x^3 + p x + q = 0.
struct CubicRoots {
  double largest;              // largest real root
  bool trigonometric = false;  // three real roots (casus irreducibilis)
};
CubicRoots solve_depressed_cubic(double p, double q);

// Root of f on [lo, hi] by bisection to full double resolution. Requires a
// sign change.
template <class F>
double bisect(F f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && lo < hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct EquilibriumResult {
  double D;            // pi^4 eps0 hbar c / (180 e^2)
  double x_tilde;      // L_eq / R from the closed-form root
  double x_bisection;  // same root by bisection on [0, 10]
  double L_eq;         // m
  double residual;     // x^3 - D x - 2D at x_tilde
  bool trigonometric;  // which Cardano branch produced x_tilde
};

// Separation where |ideal Casimir energy| of plates of area pi R^2 equals
// the Coulomb energy of two protons of radius R.
EquilibriumResult equilibrium_distance(double R);

double equilibrium_coefficient();  // D

struct YukawaQuantities {
  double meson_mass_energy;  // J, m_pi c^2
  double screening_length;   // m
  double kappa_source;       // 1/m
};

// m_pi c^2 = 2 hbar sqrt(mu_ep) omega_ep(rho).
double meson_mass(double rho, double mu_ep);

// hbar c / mass_energy.
double screening_length(double mass_energy);

YukawaQuantities yukawa_quantities(const PlasmaState& s);

struct FermiQuantities {
  double eps_F;  // J, nonrelativistic hbar^2 q_F^2 / (2 m_e)
  double q_F;    // 1/m
};
FermiQuantities fermi_quantities(double n);

struct PlasmonLinewidth {
  double delta_E;        // J
  double ratio;          // hbar omega_p / (2 eps_F)
  double bracket;        // 10 ln 2 + 2 - 4.5 ratio
  bool within_validity;  // bracket > 0
};

// Plasmon broadening for density n (one species) and q_ratio = q_pi / q_F,
// keeping the series bracket through its linear term.
PlasmonLinewidth plasmon_linewidth(double n, double q_ratio);

}  // namespace casnuc

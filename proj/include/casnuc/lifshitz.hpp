#pragma once

// Interaction free energy of two perfectly conducting plates across the
// electron-positron plasma, on the imaginary frequency axis.
//
// With both outer plates in the perfect-conductor limit every reflection
// product is 1 and each Matsubara term reduces to
//
//   (1/2pi) Int_0^inf dk k ln(1 - exp(-2 kappa_2 L)),  kappa_2^2 = k^2 + kappa^2.
//
// Substituting u = 2 kappa_2 L turns this into (1/(8 pi L^2)) Int_a^inf
// u ln(1 - e^-u) du with a = 2 kappa L, which has the exact series
// -(1/(8 pi L^2)) sum_n e^{-n a} (a/n^2 + 1/n^3). Everything below is built on
// that kernel.

#include <cstddef>
#include <utility>

#include "casnuc/plasma.hpp"

namespace casnuc {

// Imaginary-axis response of one medium.
struct LayerResponse {
  enum class Kind { finite, plasma, perfect_conductor };

  Kind kind = Kind::finite;
  double eps = 1.0;      // finite: constant eps(i xi)
  double omega_p = 0.0;  // plasma: eps(i xi) = 1 + omega_p^2 / xi^2
  double mu = 1.0;       // static relative permeability

  static LayerResponse vacuum() { return {}; }
  static LayerResponse dielectric(double eps, double mu = 1.0) {
    return {.kind = Kind::finite, .eps = eps, .mu = mu};
  }
  static LayerResponse plasma(double omega_p, double mu = 1.0) {
    return {.kind = Kind::plasma, .omega_p = omega_p, .mu = mu};
  }
  static LayerResponse perfect_conductor() { return {.kind = Kind::perfect_conductor}; }
};

enum class Method { exact_series, quadrature, asymptote, full_matsubara };

const char* to_string(Method m) noexcept;

struct FreeEnergyBreakdown {
  double zero_freq = 0.0;    // J/m^2
  double finite_freq = 0.0;  // J/m^2
  double total = 0.0;        // J/m^2
  Method method = Method::asymptote;
  double kappa = 0.0;        // 1/m, zero-frequency screening wavevector
  double area = 0.0;         // m^2
  PlasmaState state{};

  double zero_freq_pair() const { return zero_freq * area; }
  double finite_freq_pair() const { return finite_freq * area; }
  double total_pair() const { return total * area; }
};

// kappa = sqrt(k_perp^2 + eps mu (xi/c)^2). Throws DomainError on a negative
// radicand.
double kappa_perp(double k_perp, double xi, double eps, double mu);

// kappa_i of a LayerResponse. For the plasma kind at xi == 0 the xi -> 0
// limit sqrt(k_perp^2 + mu omega_p^2 / c^2) is taken. Perfect conductors are
// modelled as a plasma with omega_p = perfect_conductor_omega.
inline constexpr double kPerfectConductorOmega = 1e30;  // rad/s
double kappa_perp(double k_perp, double xi, const LayerResponse& medium);

struct ReflectionPair {
  double tm;
  double te;
};

// Fresnel amplitudes for a wave incident from medium i onto medium j.
// Throws DomainError when a denominator vanishes.
ReflectionPair reflection_pair(double eps_i, double mu_i, double eps_j, double mu_j,
                               double kappa_i, double kappa_j);

// Same, evaluated from LayerResponse descriptions at (k_perp, xi).
ReflectionPair reflection_pair(const LayerResponse& i, const LayerResponse& j,
                               double k_perp, double xi);

// Dimensionless kernel S(a) = sum_{n>=1} e^{-n a} (a/n^2 + 1/n^3), so that
// Int_a^inf u ln(1 - e^-u) du = -S(a). S(0) = zeta(3).
double screened_log_series(double a);

// n-th term of screened_log_series.
double screened_log_series_term(double a, std::size_t n);

// Zero-frequency free energy per unit area from the exact series.
double zero_freq_exact(double kappa, double L, double T);

// The n-th term of the zero_freq_exact series, scaled as a free energy per area.
double zero_freq_series_term(double kappa, double L, double T, std::size_t n);

// The same integral by tanh-sinh quadrature on u in [a, a + 60].
// Independent of the series; used as a cross-check.
double zero_freq_quadrature(double kappa, double L, double T);

// Large-separation / high-temperature form; equals the n = 1 series term.
double zero_freq_asymptote(double kappa, double L, double T);

// Leading finite-frequency asymptote
// -(k_B T)^2/(hbar c) exp(-pi rho_bar x_bar) exp(-2 pi x_bar) / L. The
// O(exp(-x^2)) remainder is dropped.
double finite_freq_asymptote(double rho, double T, double L);

// Dimensionless gap variables x_bar = 2 k_B T L / (hbar c) and
// rho_bar = rho e^2 hbar^2 / (4 pi^2 m eps0 (k_B T)^2).
double x_bar(double T, double L);
double rho_bar(double rho, double T);

struct MatsubaraSum {
  double zero_term = 0.0;    // n = 0 with half weight, J/m^2
  double finite_sum = 0.0;   // n >= 1, J/m^2
  std::size_t terms = 0;     // number of n >= 1 terms summed
  double total() const { return zero_term + finite_sum; }
};

inline constexpr double kMatsubaraRelTol = 1e-12;
inline constexpr std::size_t kMatsubaraMaxTerms = 1'000'000;

// Full Lifshitz sum between perfect conductors across the plasma at (T, rho).
// The n = 0 term uses the static permeability of `model`; the n >= 1 terms use
// eps(i xi) = 1 + omega_ep^2/xi^2 and a permeability of 1 unless `model` is
// dynamic.
MatsubaraSum full_matsubara(double L, double T, double rho, const PermeabilityModel& model);

// Screening wavevector sqrt(mu_ep) omega_ep / c of a plasma state.
double screening_wavevector(const PlasmaState& s);

// Closed-form distance-coupled kappa (magnetic or unity model).
double coupled_kappa(double L, bool magnetic);

// Distance-coupled breakdown from the closed-form expressions, where
// T(L), rho(L) and mu_ep(L) are eliminated analytically. Supports the unity
// and static_spin (table-consistent) models; others fall back to composing
// the plasma pipeline with the asymptotes.
FreeEnergyBreakdown distance_coupled_breakdown(double L, const PermeabilityModel& model,
                                               double area = 0.0);

// Same quantities by composing plasma_state_from_distance with the asymptotes.
FreeEnergyBreakdown composed_asymptote_breakdown(double L, const PermeabilityModel& model,
                                                 double area = 0.0);

struct TemperatureMode {
  enum class Kind { coupled, fixed };
  Kind kind = Kind::coupled;
  double initial_separation = 0.0;  // m; fixed: T = T(initial_separation)

  static TemperatureMode coupled() { return {}; }
  static TemperatureMode fixed_at(double L0) { return {Kind::fixed, L0}; }
};

// Default plate: two proton cross sections, R = 0.84 fm.
inline constexpr double kDefaultProtonRadius = 0.84e-15;
double plate_area(double R);

// Total interaction free energy. Coupled mode uses the distance-coupled
// closed forms; fixed mode pins T and uses zero_freq_exact plus
// finite_freq_asymptote.
FreeEnergyBreakdown total_free_energy(double L, const PermeabilityModel& model,
                                      TemperatureMode mode, double area);

// As above with an explicit evaluation method:
//   exact_series  - zero_freq_exact + finite_freq_asymptote
//   quadrature    - zero_freq_quadrature + finite_freq_asymptote
//   asymptote     - both asymptotes (closed forms in coupled mode)
//   full_matsubara- full Lifshitz sum, split into its n = 0 and n >= 1 parts
FreeEnergyBreakdown total_free_energy(double L, const PermeabilityModel& model,
                                      TemperatureMode mode, double area, Method method);

}  // namespace casnuc

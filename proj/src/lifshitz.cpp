#include "casnuc/lifshitz.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "casnuc/constants.hpp"
#include "casnuc/errors.hpp"

namespace casnuc {

using detail::require;
using std::numbers::pi;

namespace {

const PhysicalConstants& K = kConstants;

constexpr double kSeriesRelTol = 1e-15;
constexpr std::size_t kSeriesMaxTerms = 10'000'000;

// Below this a the series tail is summed analytically (Euler-Maclaurin,
// midpoint form); above it the truncated tail is already < 1e-14 relative.
constexpr double kTailCorrectionBelow = 0.1;

// Generalized exponential integrals E2(x), E3(x) for x >= 0.
std::pair<double, double> expint_e2_e3(double x) {
  if (x == 0.0) return {1.0, 0.5};
  const double e1 = -std::expint(-x);
  const double ex = std::exp(-x);
  const double e2 = ex - x * e1;
  const double e3 = 0.5 * (ex - x * e2);
  return {e2, e3};
}

// Int_M^inf e^{-a u} (a/u^2 + 1/u^3) du.
double series_tail_integral(double a, double M) {
  const auto [e2, e3] = expint_e2_e3(a * M);
  return a * e2 / M + e3 / (M * M);
}

bool is_plasma_like(const LayerResponse& m) {
  return m.kind != LayerResponse::Kind::finite;
}

double plasma_omega(const LayerResponse& m) {
  return m.kind == LayerResponse::Kind::perfect_conductor ? kPerfectConductorOmega
                                                          : m.omega_p;
}

double eps_at(const LayerResponse& m, double xi) {
  if (!is_plasma_like(m)) return m.eps;
  const double w = plasma_omega(m) / xi;
  return 1.0 + w * w;
}

double fresnel(double wj_ki, double wi_kj) {
  const double den = wj_ki + wi_kj;
  if (den == 0.0 || !std::isfinite(den)) {
    throw DomainError("reflection_pair: degenerate media (zero or non-finite denominator)");
  }
  return (wj_ki - wi_kj) / den;
}

void require_gap(double L, double T) {
  require(L > 0.0 && std::isfinite(L), "free energy: L must be positive");
  require(T > 0.0 && std::isfinite(T), "free energy: T must be positive");
}

}  // namespace

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::exact_series: return "exact_series";
    case Method::quadrature: return "quadrature";
    case Method::asymptote: return "asymptote";
    case Method::full_matsubara: return "full_matsubara";
  }
  return "?";
}

double kappa_perp(double k_perp, double xi, double eps, double mu) {
  require(k_perp >= 0.0, "kappa_perp: k_perp must be non-negative");
  require(xi >= 0.0, "kappa_perp: xi must be non-negative");
  const double q = xi / K.c;
  const double radicand = k_perp * k_perp + eps * mu * q * q;
  require(radicand >= 0.0, "kappa_perp: negative radicand");
  return std::sqrt(radicand);
}

double kappa_perp(double k_perp, double xi, const LayerResponse& medium) {
  if (!is_plasma_like(medium)) return kappa_perp(k_perp, xi, medium.eps, medium.mu);
  require(k_perp >= 0.0, "kappa_perp: k_perp must be non-negative");
  require(xi >= 0.0, "kappa_perp: xi must be non-negative");
  // eps xi^2 = xi^2 + omega_p^2, finite at xi = 0.
  const double w = plasma_omega(medium);
  const double rad = k_perp * k_perp + medium.mu * (xi * xi + w * w) / (K.c * K.c);
  return std::sqrt(rad);
}

ReflectionPair reflection_pair(double eps_i, double mu_i, double eps_j, double mu_j,
                               double kappa_i, double kappa_j) {
  return {.tm = fresnel(eps_j * kappa_i, eps_i * kappa_j),
          .te = fresnel(mu_j * kappa_i, mu_i * kappa_j)};
}

ReflectionPair reflection_pair(const LayerResponse& i, const LayerResponse& j,
                               double k_perp, double xi) {
  const double ki = kappa_perp(k_perp, xi, i);
  const double kj = kappa_perp(k_perp, xi, j);
  const ReflectionPair te_only{.tm = 0.0, .te = fresnel(j.mu * ki, i.mu * kj)};
  if (xi > 0.0 || (!is_plasma_like(i) && !is_plasma_like(j))) {
    const double ei = xi > 0.0 ? eps_at(i, xi) : i.eps;
    const double ej = xi > 0.0 ? eps_at(j, xi) : j.eps;
    return {.tm = fresnel(ej * ki, ei * kj), .te = te_only.te};
  }
  // xi -> 0 with at least one divergent eps: weight by eps xi^2, which is
  // omega_p^2 for plasma-like media and 0 for finite ones.
  const double wi = is_plasma_like(i) ? plasma_omega(i) * plasma_omega(i) : 0.0;
  const double wj = is_plasma_like(j) ? plasma_omega(j) * plasma_omega(j) : 0.0;
  return {.tm = fresnel(wj * ki, wi * kj), .te = te_only.te};
}

double screened_log_series_term(double a, std::size_t n) {
  const double nn = static_cast<double>(n);
  return std::exp(-nn * a) * (a / (nn * nn) + 1.0 / (nn * nn * nn));
}

double screened_log_series(double a) {
  require(a >= 0.0 && !std::isnan(a), "screened_log_series: a must be non-negative");
  if (std::isinf(a)) return 0.0;
  // Neumaier-compensated: the a -> 0 series runs to ~1e5 terms.
  double sum = 0.0;
  double comp = 0.0;
  std::size_t n = 1;
  for (;; ++n) {
    const double term = screened_log_series_term(a, n);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    const double next = screened_log_series_term(a, n + 1);
    if (next < kSeriesRelTol * sum || next == 0.0) break;
    if (n >= kSeriesMaxTerms) {
      throw NumericalError("screened_log_series: term budget exhausted");
    }
  }
  if (a < kTailCorrectionBelow) comp += series_tail_integral(a, static_cast<double>(n) + 0.5);
  return sum + comp;
}

double zero_freq_exact(double kappa, double L, double T) {
  require_gap(L, T);
  require(kappa >= 0.0, "zero_freq_exact: kappa must be non-negative");
  return -K.k_B * T / (8.0 * pi * L * L) * screened_log_series(2.0 * kappa * L);
}

double zero_freq_series_term(double kappa, double L, double T, std::size_t n) {
  require_gap(L, T);
  require(n >= 1, "zero_freq_series_term: n starts at 1");
  return -K.k_B * T / (8.0 * pi * L * L) * screened_log_series_term(2.0 * kappa * L, n);
}

double zero_freq_quadrature(double kappa, double L, double T) {
  require_gap(L, T);
  require(kappa >= 0.0, "zero_freq_quadrature: kappa must be non-negative");
  const double a = 2.0 * kappa * L;
  // u ln(1 - e^-u). The two-argument form passes the distance to the nearer
  // endpoint, so u stays exact next to u = a = 0.
  auto integrand = [a](double x, double xc) {
    const double u = xc < 0.0 ? a - xc : x;
    if (u <= 0.0) return 0.0;
    const double log1mexp = u < std::numbers::ln2 ? std::log(-std::expm1(-u)) : std::log1p(-std::exp(-u));
    return u * log1mexp;
  };
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  constexpr double tol = 1e-14;
  double error = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double integral = integrator.integrate(integrand, a, a + 60.0, tol, &error, &l1, &levels);
  if (!std::isfinite(integral) || error > 1e-10 * std::abs(integral)) {
    std::ostringstream msg;
    msg << "zero_freq_quadrature: no convergence (a=" << a << ", integral=" << integral
        << ", error estimate=" << error << ", L1=" << l1 << ")";
    throw NumericalError(msg.str());
  }
  return K.k_B * T / (8.0 * pi * L * L) * integral;
}

double zero_freq_asymptote(double kappa, double L, double T) {
  require_gap(L, T);
  require(kappa > 0.0, "zero_freq_asymptote: kappa must be positive");
  const double a = 2.0 * kappa * L;
  return -K.k_B * T / (2.0 * pi) * kappa * kappa * std::exp(-a) * (1.0 / a + 1.0 / (a * a));
}

double x_bar(double T, double L) { return 2.0 * K.k_B * T * L / (K.hbar * K.c); }

double rho_bar(double rho, double T) {
  const double kT = K.k_B * T;
  return rho * K.e * K.e * K.hbar * K.hbar / (4.0 * pi * pi * K.m_e * K.eps0 * kT * kT);
}

double finite_freq_asymptote(double rho, double T, double L) {
  require_gap(L, T);
  require(rho >= 0.0, "finite_freq_asymptote: rho must be non-negative");
  const double kT = K.k_B * T;
  const double xb = x_bar(T, L);
  return -(kT * kT / (K.hbar * K.c)) * std::exp(-pi * rho_bar(rho, T) * xb) *
         std::exp(-2.0 * pi * xb) / L;
}

MatsubaraSum full_matsubara(double L, double T, double rho, const PermeabilityModel& model) {
  require_gap(L, T);
  require(rho >= 0.0, "full_matsubara: rho must be non-negative");
  const double omega2 = rho * K.e * K.e / (K.eps0 * K.m_e);
  const double mu0 = static_permeability(model, rho, T);

  MatsubaraSum out;
  out.zero_term = zero_freq_exact(std::sqrt(mu0 * omega2) / K.c, L, T);

  const double prefactor = -K.k_B * T / (4.0 * pi * L * L);
  const double xi1 = 2.0 * pi * K.k_B * T / K.hbar;
  for (std::size_t n = 1;; ++n) {
    const double xi = xi1 * static_cast<double>(n);
    const double mu = finite_frequency_permeability(model, xi, rho, T);
    const double kappa = std::sqrt(mu * (xi * xi + omega2)) / K.c;
    const double term = prefactor * screened_log_series(2.0 * kappa * L);
    out.finite_sum += term;
    out.terms = n;
    if (std::abs(term) <= kMatsubaraRelTol * std::abs(out.total())) break;
    if (n >= kMatsubaraMaxTerms) {
      throw NumericalError("full_matsubara: Matsubara term budget exhausted");
    }
  }
  if (!std::isfinite(out.total())) throw NumericalError("full_matsubara: non-finite result");
  return out;
}

double screening_wavevector(const PlasmaState& s) {
  return std::sqrt(s.mu_ep) * s.omega_ep / K.c;
}

double coupled_kappa(double L, bool magnetic) {
  require(L > 0.0, "coupled_kappa: L must be positive");
  const double e2 = K.e * K.e;
  const double magnetic_factor =
      magnetic ? 1.0 + std::sqrt(3.0) * e2 * K.hbar * K.mu0 * K.zeta3 /
                           (8.0 * pi * pi * K.c * L * L * K.m_e * K.m_e)
               : 1.0;
  return std::pow(3.0, 0.125) / (2.0 * pi) *
         std::sqrt(e2 * K.mu0 * K.zeta3 / (2.0 * L * L * L * K.m_e) * magnetic_factor);
}

double plate_area(double R) {
  require(R > 0.0, "plate_area: R must be positive");
  return pi * R * R;
}

FreeEnergyBreakdown composed_asymptote_breakdown(double L, const PermeabilityModel& model,
                                                 double area) {
  const PlasmaState s = plasma_state_from_distance(L, model);
  FreeEnergyBreakdown b;
  b.method = Method::asymptote;
  b.state = s;
  b.area = area;
  b.kappa = screening_wavevector(s);
  b.zero_freq = zero_freq_asymptote(b.kappa, L, s.T);
  b.finite_freq = finite_freq_asymptote(s.rho, s.T, L);
  b.total = b.zero_freq + b.finite_freq;
  return b;
}

FreeEnergyBreakdown distance_coupled_breakdown(double L, const PermeabilityModel& model,
                                               double area) {
  require(L > 0.0, "distance_coupled_breakdown: L must be positive");
  model.validate();
  const bool closed_form =
      model.kind == PermeabilityModel::Kind::unity ||
      (model.kind == PermeabilityModel::Kind::static_spin &&
       model.convention == PermeabilityConvention::table_consistent);
  if (!closed_form) return composed_asymptote_breakdown(L, model, area);

  const double hc = K.hbar * K.c;
  const double kappa = coupled_kappa(L, model.kind == PermeabilityModel::Kind::static_spin);
  const double a = 2.0 * kappa * L;

  FreeEnergyBreakdown b;
  b.method = Method::asymptote;
  b.state = plasma_state_from_distance(L, model);
  b.area = area;
  b.kappa = kappa;
  b.zero_freq = -(hc / (4.0 * std::pow(3.0, 0.25) * pi * L)) * kappa * kappa * std::exp(-a) *
                (1.0 / a + 1.0 / (a * a));
  b.finite_freq = -(hc / (4.0 * std::sqrt(3.0) * L * L * L)) *
                  std::exp(-std::sqrt(3.0) * K.zeta3 * K.e * K.e * K.mu0 /
                               (8.0 * pi * pi * pi * K.m_e * L) -
                           2.0 * pi / std::pow(3.0, 0.25));
  b.total = b.zero_freq + b.finite_freq;
  return b;
}

FreeEnergyBreakdown total_free_energy(double L, const PermeabilityModel& model,
                                      TemperatureMode mode, double area) {
  const Method m =
      mode.kind == TemperatureMode::Kind::coupled ? Method::asymptote : Method::exact_series;
  return total_free_energy(L, model, mode, area, m);
}

FreeEnergyBreakdown total_free_energy(double L, const PermeabilityModel& model,
                                      TemperatureMode mode, double area, Method method) {
  require(L > 0.0 && std::isfinite(L), "total_free_energy: L must be positive");
  require(area > 0.0 && std::isfinite(area), "total_free_energy: area must be positive");
  model.validate();

  if (mode.kind == TemperatureMode::Kind::coupled && method == Method::asymptote) {
    return distance_coupled_breakdown(L, model, area);
  }

  double T = 0.0;
  if (mode.kind == TemperatureMode::Kind::coupled) {
    T = temperature_from_distance(L);
  } else {
    require(mode.initial_separation > 0.0,
            "total_free_energy: fixed mode needs a positive initial separation");
    T = temperature_from_distance(mode.initial_separation);
  }
  const PlasmaState s = plasma_state_from_temperature(T, L, model);

  FreeEnergyBreakdown b;
  b.method = method;
  b.state = s;
  b.area = area;
  b.kappa = screening_wavevector(s);
  switch (method) {
    case Method::exact_series:
      b.zero_freq = zero_freq_exact(b.kappa, L, T);
      b.finite_freq = finite_freq_asymptote(s.rho, T, L);
      break;
    case Method::quadrature:
      b.zero_freq = zero_freq_quadrature(b.kappa, L, T);
      b.finite_freq = finite_freq_asymptote(s.rho, T, L);
      break;
    case Method::asymptote:
      b.zero_freq = zero_freq_asymptote(b.kappa, L, T);
      b.finite_freq = finite_freq_asymptote(s.rho, T, L);
      break;
    case Method::full_matsubara: {
      const MatsubaraSum sum = full_matsubara(L, T, s.rho, model);
      b.zero_freq = sum.zero_term;
      b.finite_freq = sum.finite_sum;
      break;
    }
  }
  b.total = b.zero_freq + b.finite_freq;
  return b;
}

}  // namespace casnuc

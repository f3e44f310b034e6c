#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "casnuc/constants.hpp"
#include "casnuc/errors.hpp"
#include "casnuc/lifshitz.hpp"
#include "casnuc/units.hpp"

using namespace casnuc;
using std::numbers::pi;

namespace {

constexpr double fm = 1e-15;
constexpr double MeV = 1.602176634e-13;
const PhysicalConstants& K = constants();

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Oracle: the defining k-integral (k_B T / 2 pi) Int dk k ln(1 - exp(-2 L sqrt(k^2 + kappa^2)))
// by composite Simpson in s = sqrt(k), without the u-substitution or the series.
double zero_freq_direct_k_integral(double kappa, double L, double T) {
  const double k_max = 40.0 / L;
  const double s_max = std::sqrt(k_max);
  const int n = 200000;
  const double h = s_max / n;
  auto f = [&](double s) {
    if (s == 0.0) return 0.0;
    const double k = s * s;
    const double arg = 2.0 * L * std::sqrt(k * k + kappa * kappa);
    return 2.0 * s * k * std::log(-std::expm1(-arg));
  };
  double sum = f(0.0) + f(s_max);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return K.k_B * T / (2.0 * pi) * sum * h / 3.0;
}

FreeEnergyBreakdown coupled(double L_fm, PermeabilityModel m) {
  return total_free_energy(L_fm * fm, m, TemperatureMode::coupled(), plate_area(kDefaultProtonRadius));
}

}  // namespace

TEST(KappaPerp, Vacuum) {
  EXPECT_EQ(kappa_perp(3e14, 0.0, 1.0, 1.0), 3e14);
  EXPECT_EQ(kappa_perp(3e14, 0.0, LayerResponse::vacuum()), 3e14);
}

TEST(KappaPerp, PlasmaStaticLimit) {
  const double w = 2.5e23, mu = 360.8;
  const auto plasma = LayerResponse::plasma(w, mu);
  EXPECT_NEAR(rel(kappa_perp(0.0, 0.0, plasma), std::sqrt(mu) * w / K.c), 0.0, 1e-15);
  const double expected = std::sqrt(1e30 + mu * std::pow(w / K.c, 2));
  EXPECT_NEAR(rel(kappa_perp(1e15, 0.0, plasma), expected), 0.0, 1e-15);
  EXPECT_NEAR(kappa_perp(1e15, 0.0, plasma), 1.58e16, 0.01e16);
  // Small xi approaches the xi -> 0 limit continuously.
  const double xi = 1e10;
  const double eps = 1.0 + w * w / (xi * xi);
  EXPECT_NEAR(rel(kappa_perp(1e15, xi, eps, mu), kappa_perp(1e15, 0.0, plasma)), 0.0, 1e-12);
}

TEST(KappaPerp, NegativeRadicandThrows) {
  EXPECT_THROW(kappa_perp(0.0, 1e20, -5.0, 1.0), DomainError);
  EXPECT_THROW(kappa_perp(-1.0, 0.0, 1.0, 1.0), DomainError);
}

TEST(Reflection, IdenticalMediaVanish) {
  const auto r = reflection_pair(2.0, 3.0, 2.0, 3.0, 1e15, 1e15);
  EXPECT_EQ(r.tm, 0.0);
  EXPECT_EQ(r.te, 0.0);
  const auto p = LayerResponse::plasma(1e23, 5.0);
  const auto q = reflection_pair(p, p, 1e15, 1e22);
  EXPECT_EQ(q.tm, 0.0);
  EXPECT_EQ(q.te, 0.0);
}

TEST(Reflection, PerfectConductorLimit) {
  const double T = 8.7e11;
  const double xi1 = 2 * pi * K.k_B * T / K.hbar;
  const auto gap = LayerResponse::plasma(2.5e23, 360.8);
  const auto pc = LayerResponse::plasma(kPerfectConductorOmega);
  for (double k : {0.0, 1e14, 1e15, 1e16}) {
    EXPECT_LT(std::abs(reflection_pair(gap, pc, k, xi1).tm - 1.0), 1e-6) << k;
    EXPECT_LT(std::abs(reflection_pair(gap, pc, k, 0.0).tm - 1.0), 1e-6) << k;
  }
  // Round-trip products A = r_12 r_32 at xi = 0, medium 1 = medium 3.
  for (double k : {0.0, 1e14, 1e15}) {
    const auto r12 = reflection_pair(gap, LayerResponse::perfect_conductor(), k, 0.0);
    EXPECT_LT(std::abs(r12.tm * r12.tm - 1.0), 1e-6);
    EXPECT_LT(std::abs(r12.te * r12.te - 1.0), 1e-6);
  }
}

TEST(Reflection, DegenerateThrows) {
  EXPECT_THROW(reflection_pair(1.0, 1.0, 1.0, 1.0, 0.0, 0.0), DomainError);
}

TEST(Reflection, MagnitudesBounded) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lg(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const auto a = LayerResponse::plasma(std::pow(10.0, 20 + 5 * lg(rng)), 1.0 + 500 * lg(rng));
    const auto b = LayerResponse::dielectric(1.0 + 50 * lg(rng), 1.0 + 10 * lg(rng));
    const double k = std::pow(10.0, 12 + 6 * lg(rng));
    const double xi = i % 3 == 0 ? 0.0 : std::pow(10.0, 18 + 7 * lg(rng));
    const auto r = reflection_pair(a, b, k, xi);
    EXPECT_LE(std::abs(r.tm), 1.0);
    EXPECT_LE(std::abs(r.te), 1.0);
  }
}

TEST(Series, KernelReferenceValues) {
  EXPECT_NEAR(screened_log_series(0.0), K.zeta3, 1e-15);
  // S(a) -> Li3-style behaviour: monotone decreasing in a.
  double prev = screened_log_series(0.0);
  for (double a : {1e-8, 1e-4, 0.01, 0.09, 0.11, 0.5, 1.0, 5.0, 20.0, 100.0}) {
    const double s = screened_log_series(a);
    EXPECT_LT(s, prev) << a;
    prev = s;
  }
  EXPECT_EQ(screened_log_series(std::numeric_limits<double>::infinity()), 0.0);
  EXPECT_THROW(screened_log_series(-1.0), DomainError);
}

TEST(ZeroFreqExact, KappaZeroClosedForm) {
  for (double L : {1 * fm, 2 * fm, 3 * fm}) {
    const double T = 5e11;
    const double ideal = -K.zeta3 * K.k_B * T / (8 * pi * L * L);
    EXPECT_NEAR(rel(zero_freq_exact(0.0, L, T), ideal), 0.0, 1e-12);
  }
}

TEST(ZeroFreqExact, ScreenedToZero) {
  const double v = zero_freq_exact(2e17, 1 * fm, 8.7e11);
  EXPECT_LT(v, 0.0);
  EXPECT_LT(std::abs(v), 1e-150 * std::abs(zero_freq_exact(0.0, 1 * fm, 8.7e11)));
  EXPECT_EQ(zero_freq_exact(1e30, 1 * fm, 8.7e11), 0.0);
}

TEST(ZeroFreqExact, UnityStateAtOneFermi) {
  const PlasmaState s = plasma_state_from_distance(1 * fm, PermeabilityModel::unity());
  const double kappa = screening_wavevector(s);
  const double area = plate_area(kDefaultProtonRadius);
  const double exact = zero_freq_exact(kappa, 1 * fm, s.T);
  const double oracle = zero_freq_direct_k_integral(kappa, 1 * fm, s.T);
  EXPECT_NEAR(rel(exact, oracle), 0.0, 1e-8);
  // Frozen from the direct k-integral oracle.
  EXPECT_NEAR(exact * area / MeV, -3.42787507, 1e-6);
}

TEST(ZeroFreqExact, DomainErrors) {
  EXPECT_THROW(zero_freq_exact(1.0, 0.0, 1.0), DomainError);
  EXPECT_THROW(zero_freq_exact(1.0, 1.0, -1.0), DomainError);
  EXPECT_THROW(zero_freq_exact(-1.0, 1.0, 1.0), DomainError);
}

TEST(ZeroFreqQuadrature, AgreesWithSeries) {
  for (double kL : {0.0, 0.1, 1.0, 5.0, 20.0}) {
    for (double L_fm : {1.0, 2.0, 3.0}) {
      const double L = L_fm * fm;
      const double T = temperature_from_distance(L);
      const double kappa = kL / L;
      EXPECT_NEAR(rel(zero_freq_quadrature(kappa, L, T), zero_freq_exact(kappa, L, T)), 0.0, 1e-8)
          << "kL=" << kL << " L=" << L_fm;
    }
  }
}

TEST(ZeroFreqQuadrature, KappaZeroAndMonotone) {
  const double L = 2 * fm, T = 3e11;
  EXPECT_NEAR(rel(zero_freq_quadrature(0.0, L, T), -K.zeta3 * K.k_B * T / (8 * pi * L * L)), 0.0, 1e-9);
  double prev = zero_freq_quadrature(0.0, L, T);
  for (double kL : {0.05, 0.2, 1.0, 3.0, 8.0}) {
    const double v = zero_freq_quadrature(kL / L, L, T);
    EXPECT_GT(v, prev);
    EXPECT_LT(v, 0.0);
    prev = v;
  }
}

TEST(ZeroFreqAsymptote, EqualsFirstSeriesTerm) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double L = (0.5 + 4.5 * u(rng)) * fm;
    const double T = std::pow(10.0, 10 + 3 * u(rng));
    const double kappa = std::pow(10.0, 13 + 3 * u(rng));
    EXPECT_NEAR(rel(zero_freq_asymptote(kappa, L, T), zero_freq_series_term(kappa, L, T, 1)), 0.0, 1e-12);
  }
}

TEST(ZeroFreqAsymptote, ConvergesToExactAtLargeScreening) {
  const double L = 1 * fm, T = 8.7e11;
  const double kappa = 10.0 / (2 * L);
  EXPECT_NEAR(zero_freq_asymptote(kappa, L, T) / zero_freq_exact(kappa, L, T), 1.0, 0.01);
  EXPECT_THROW(zero_freq_asymptote(0.0, L, T), DomainError);
}

TEST(ZeroFreqAsymptote, MagneticSuppression) {
  const PlasmaState mag = plasma_state_from_distance(1 * fm, PermeabilityModel::spin());
  const PlasmaState non = plasma_state_from_distance(1 * fm, PermeabilityModel::unity());
  const double fm_mag = zero_freq_asymptote(screening_wavevector(mag), 1 * fm, mag.T);
  const double fm_non = zero_freq_asymptote(screening_wavevector(non), 1 * fm, non.T);
  EXPECT_NEAR(screening_wavevector(mag) * fm, 16.0, 0.3);
  EXPECT_NEAR(screening_wavevector(non) * fm, 0.84, 0.01);
  EXPECT_LT(std::abs(fm_mag), 1e-10 * std::abs(fm_non));
}

TEST(FiniteFreqAsymptote, CoupledValueAtOneFermi) {
  const PlasmaState s = plasma_state_from_distance(1 * fm, PermeabilityModel::unity());
  const double v = finite_freq_asymptote(s.rho, s.T, 1 * fm) * plate_area(kDefaultProtonRadius) / MeV;
  const auto closed = distance_coupled_breakdown(1 * fm, PermeabilityModel::unity(),
                                                 plate_area(kDefaultProtonRadius));
  EXPECT_NEAR(rel(v * MeV, closed.finite_freq_pair()), 0.0, 1e-10);
  EXPECT_NEAR(v, -0.40, 0.01);
}

TEST(FiniteFreqAsymptote, PhotonLimitAndMonotone) {
  const double T = 5e11, L = 1.3 * fm;
  const double kT = K.k_B * T;
  const double photons = -kT * kT * std::exp(-2 * pi * x_bar(T, L)) / (K.hbar * K.c * L);
  EXPECT_NEAR(rel(finite_freq_asymptote(0.0, T, L), photons), 0.0, 1e-14);
  double prev = finite_freq_asymptote(1e42, T, 0.5 * fm);
  for (double Lf = 0.6; Lf < 5.0; Lf += 0.1) {
    const double v = finite_freq_asymptote(1e42, T, Lf * fm);
    EXPECT_LT(std::abs(v), std::abs(prev));
    prev = v;
  }
  EXPECT_THROW(finite_freq_asymptote(1e42, 0.0, L), DomainError);
}

TEST(FullMatsubara, ZeroTermIsExactSeries) {
  for (double L_fm : {1.0, 2.0, 3.0}) {
    const double L = L_fm * fm;
    const PlasmaState s = plasma_state_from_distance(L, PermeabilityModel::spin());
    const MatsubaraSum sum = full_matsubara(L, s.T, s.rho, PermeabilityModel::spin());
    EXPECT_NEAR(rel(sum.zero_term, zero_freq_exact(screening_wavevector(s), L, s.T)), 0.0, 1e-12);
    EXPECT_LT(sum.finite_sum, 0.0);
    EXPECT_GE(sum.terms, 1u);
  }
}

TEST(FullMatsubara, ClassicalIdealMetalLimit) {
  const double L = 2 * fm;
  const double T = 5.0 * K.hbar * K.c / (2 * K.k_B * L);  // x_bar = 5
  ASSERT_NEAR(x_bar(T, L), 5.0, 1e-12);
  const MatsubaraSum sum = full_matsubara(L, T, 0.0, PermeabilityModel::unity());
  const double classical = -K.zeta3 * K.k_B * T / (8 * pi * L * L);
  EXPECT_NEAR(sum.total() / classical, 1.0, 0.01);
}

TEST(FullMatsubara, DynamicPermeabilityNegligibleAtFiniteFrequencies) {
  const double L = 1 * fm;
  const PlasmaState s = plasma_state_from_distance(L, PermeabilityModel::spin());
  const auto fixed = full_matsubara(L, s.T, s.rho, PermeabilityModel::spin());
  const auto dyn = full_matsubara(L, s.T, s.rho, PermeabilityModel::dynamic(1e10));
  EXPECT_NEAR(rel(dyn.finite_sum, fixed.finite_sum), 0.0, 1e-15);
  EXPECT_NEAR(rel(dyn.zero_term, fixed.zero_term), 0.0, 1e-15);
  // A proper frequency comparable to xi_1 screens the n >= 1 terms.
  const auto fast = full_matsubara(L, s.T, s.rho, PermeabilityModel::dynamic(1e24));
  EXPECT_GT(fast.finite_sum, fixed.finite_sum);
  EXPECT_LT(fast.finite_sum, 0.0);
}

TEST(FullMatsubara, AsymptoteApproachedAtLargeXbar) {
  const double L = 1 * fm;
  double prev_dev = 1e9;
  for (double xb : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double T = xb * K.hbar * K.c / (2 * K.k_B * L);
    const double full = full_matsubara(L, T, 0.0, PermeabilityModel::unity()).finite_sum;
    const double dev = std::abs(full / finite_freq_asymptote(0.0, T, L) - 1.0);
    EXPECT_LT(dev, prev_dev);
    prev_dev = dev;
  }
  EXPECT_LT(prev_dev, 0.03);
}

TEST(DistanceCoupled, KappaAndConstants) {
  const PlasmaState s = plasma_state_from_distance(1 * fm, PermeabilityModel::unity());
  EXPECT_NEAR(rel(coupled_kappa(1 * fm, false), s.omega_ep / K.c), 0.0, 1e-12);
  EXPECT_NEAR(coupled_kappa(1 * fm, false), 8.4e14, 0.05e14);
  EXPECT_NEAR(2 * pi * x_bar(temperature_from_distance(1 * fm), 1 * fm), 4.774188416, 1e-9);
  EXPECT_NEAR(2 * pi / std::pow(3.0, 0.25), 4.774188416, 1e-9);
}

TEST(DistanceCoupled, MatchesComposedPipeline) {
  for (double L_fm : {1.0, 1.37, 2.0, 2.6, 3.0}) {
    for (auto model : {PermeabilityModel::unity(), PermeabilityModel::spin()}) {
      const auto closed = distance_coupled_breakdown(L_fm * fm, model, 1.0);
      const auto composed = composed_asymptote_breakdown(L_fm * fm, model, 1.0);
      EXPECT_NEAR(rel(closed.kappa, composed.kappa), 0.0, 1e-10);
      EXPECT_NEAR(rel(closed.zero_freq, composed.zero_freq), 0.0, 1e-10) << L_fm;
      EXPECT_NEAR(rel(closed.finite_freq, composed.finite_freq), 0.0, 1e-10) << L_fm;
      EXPECT_NEAR(rel(closed.kappa, std::sqrt(closed.state.mu_ep) * closed.state.omega_ep / K.c), 0.0, 1e-12);
    }
  }
}

TEST(TotalFreeEnergy, CoupledUnityAtOneFermi) {
  const auto b = coupled(1.0, PermeabilityModel::unity());
  EXPECT_EQ(b.total, b.zero_freq + b.finite_freq);
  EXPECT_EQ(b.method, Method::asymptote);
  EXPECT_NEAR(b.zero_freq_pair() / MeV, -3.3, 0.05);
  EXPECT_NEAR(b.finite_freq_pair() / MeV, -0.40, 0.01);
  EXPECT_NEAR(rel(b.total_pair(), b.total * b.area), 0.0, 1e-15);
}

TEST(TotalFreeEnergy, MagneticAboveUnity) {
  for (double L_fm = 1.0; L_fm <= 3.0 + 1e-9; L_fm += 0.1) {
    const auto mag = coupled(L_fm, PermeabilityModel::spin());
    const auto non = coupled(L_fm, PermeabilityModel::unity());
    EXPECT_LT(std::abs(mag.zero_freq), std::abs(non.zero_freq)) << L_fm;
    EXPECT_LT(mag.zero_freq, 0.0);
    EXPECT_LT(mag.finite_freq, 0.0);
  }
}

TEST(TotalFreeEnergy, CoupledMagnitudeDecreasesWithDistance) {
  for (auto model : {PermeabilityModel::unity(), PermeabilityModel::spin()}) {
    double prev = std::abs(coupled(1.0, model).total);
    for (double L_fm = 1.02; L_fm <= 3.0; L_fm += 0.02) {
      const double v = std::abs(coupled(L_fm, model).total);
      EXPECT_LT(v, prev) << L_fm;
      prev = v;
    }
  }
}

TEST(TotalFreeEnergy, FixedModePinsTemperature) {
  const double area = plate_area(kDefaultProtonRadius);
  const auto mode = TemperatureMode::fixed_at(1 * fm);
  const auto b = total_free_energy(2 * fm, PermeabilityModel::spin(), mode, area);
  EXPECT_EQ(b.method, Method::exact_series);
  EXPECT_NEAR(rel(b.state.T, temperature_from_distance(1 * fm)), 0.0, 1e-15);
  EXPECT_NEAR(rel(b.zero_freq, zero_freq_exact(b.kappa, 2 * fm, b.state.T)), 0.0, 1e-15);
  EXPECT_NEAR(rel(b.finite_freq, finite_freq_asymptote(b.state.rho, b.state.T, 2 * fm)), 0.0, 1e-15);
  EXPECT_THROW(total_free_energy(2 * fm, PermeabilityModel::spin(), TemperatureMode::fixed_at(0.0), area),
               DomainError);
  EXPECT_THROW(total_free_energy(2 * fm, PermeabilityModel::spin(), mode, 0.0), DomainError);
}

TEST(TotalFreeEnergy, MethodsAgreeWhereExpected) {
  const double area = plate_area(kDefaultProtonRadius);
  for (double L_fm : {1.0, 2.0, 3.0}) {
    const auto ex = total_free_energy(L_fm * fm, PermeabilityModel::unity(), TemperatureMode::coupled(),
                                      area, Method::exact_series);
    const auto qu = total_free_energy(L_fm * fm, PermeabilityModel::unity(), TemperatureMode::coupled(),
                                      area, Method::quadrature);
    const auto full = total_free_energy(L_fm * fm, PermeabilityModel::unity(), TemperatureMode::coupled(),
                                        area, Method::full_matsubara);
    EXPECT_NEAR(rel(ex.zero_freq, qu.zero_freq), 0.0, 1e-8);
    EXPECT_NEAR(rel(full.zero_freq, ex.zero_freq), 0.0, 1e-12);
    // The full sum keeps every n >= 1 term, so it is at least as attractive.
    EXPECT_LT(full.finite_freq, ex.finite_freq);
  }
}

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "casnuc/constants.hpp"
#include "casnuc/errors.hpp"
#include "casnuc/units.hpp"

using namespace casnuc;

TEST(Constants, CodataValues) {
  EXPECT_EQ(constants().hbar, 1.054571817e-34);
  EXPECT_NEAR(constants().mu_B / 9.2740100783e-24, 1.0, 1e-9);
  EXPECT_NEAR(constants().zeta3, 1.2020569031595943, 1e-15);
}

TEST(Constants, Identities) {
  const auto& K = constants();
  EXPECT_NEAR(K.mu0 * K.eps0 * K.c * K.c, 1.0, 1e-9);
  EXPECT_NEAR(K.mu_B / (K.e * K.hbar / (2.0 * K.m_e)), 1.0, 1e-15);
  EXPECT_EQ(&constants(), &constants());
}

TEST(Units, Definitions) {
  EXPECT_DOUBLE_EQ(convert(1.602176634e-13, Unit::J, Unit::MeV), 1.0);
  EXPECT_DOUBLE_EQ(convert(1.0, Unit::fm, Unit::m), 1e-15);
  EXPECT_DOUBLE_EQ(convert(1e6, Unit::eV, Unit::MeV), 1.0);
  EXPECT_EQ(convert(300.0, Unit::K, Unit::K), 300.0);
}

TEST(Units, HbarCInMeVFm) {
  const double hc = constants().hbar * constants().c;
  EXPECT_NEAR(convert(hc, Unit::J_m, Unit::MeV_fm), 197.327, 1e-3);
  EXPECT_NEAR(convert(hc, parse_unit("J*m"), parse_unit("MeV\xC2\xB7" "fm")), 197.3269804, 1e-6);
}

TEST(Units, IncompatibleDimensionsThrow) {
  EXPECT_THROW(convert(1.0, Unit::J, Unit::m), DomainError);
  EXPECT_THROW(convert(1.0, Unit::K, Unit::eV), DomainError);
  EXPECT_THROW(convert(1.0, Unit::MeV_fm, Unit::MeV), DomainError);
  EXPECT_THROW(parse_unit("furlong"), DomainError);
}

TEST(Units, RoundTripProperty) {
  const Unit all[] = {Unit::J, Unit::MeV, Unit::eV, Unit::m, Unit::fm, Unit::K, Unit::J_m, Unit::MeV_fm};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> exponent(-40.0, 40.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = std::pow(10.0, exponent(rng)) * (trial % 2 ? -1.0 : 1.0);
    for (Unit a : all) {
      for (Unit b : all) {
        if (dimension_of(a) != dimension_of(b)) continue;
        const double back = convert(convert(x, a, b), b, a);
        EXPECT_NEAR(back / x, 1.0, 1e-14) << unit_name(a) << " <-> " << unit_name(b);
      }
    }
  }
}

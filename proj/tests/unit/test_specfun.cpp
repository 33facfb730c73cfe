#include <gtest/gtest.h>

#include <cmath>

#include "hypk/error.hpp"
#include "hypk/specfun.hpp"

using namespace hypk;
using namespace hypk::specfun;

namespace {
// Reference values from 40-digit arbitrary precision evaluations.
struct Ref {
  double nu, z, value;
};
const Ref kI[] = {
    {0.3, 0.7, 0.89190022275282291232},  {2.5, 15, 273873.64157879951081},
    {7.2, 3.1, 0.0041402425137548879908}, {10, 30, 145831809975.96712377},
    {0, 25, 5774560606.4663103158},       {1.7, 100, 1.0582706327620712228e+42},
    {0.5, 1, 0.93767488824548764672},     {1, 1, 0.56515910399248502721},
    {2, 1, 0.13574766976703828118},       {33.3, 12, 9.2244860073818548773e-12},
};
const Ref kK[] = {
    {0.3, 0.7, 0.6895624897569750649},    {2.5, 15, 1.2010945859989106037e-7},
    {7.2, 3.1, 15.390083750734279912},    {0, 25, 3.4641615622131143554e-12},
    {13.4, 2, 610892773.23870775451},     {0.5, 200, 1.2264463640346494289e-88},
    {0.5, M_PI, 0.030556854645954553927}, {1, 0.01, 99.973894118296245561},
};
}  // namespace

TEST(BesselI, MatchesHighPrecisionReference) {
  for (const auto& r : kI) EXPECT_NEAR(bessel_i(r.nu, r.z) / r.value, 1.0, 1e-12) << r.nu << " " << r.z;
}

TEST(BesselI, HalfIntegerClosedForm) {
  for (double z : {0.1, 1.0, 5.0, 30.0})
    EXPECT_NEAR(bessel_i(0.5, z) / (std::sqrt(2.0 / (M_PI * z)) * std::sinh(z)), 1.0, 1e-13);
}

TEST(BesselI, PositiveAndIncreasing) {
  for (double nu : {0.0, 0.4, 3.0, 17.5}) {
    double prev = 0.0;
    for (double z = 0.05; z < 80; z *= 1.3) {
      const double v = bessel_i(nu, z);
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(BesselI, Recurrence) {
  for (double nu : {1.0, 1.5, 2.3, 8.0, 20.1})
    for (double z : {0.2, 1.0, 4.0, 15.0, 35.0}) {
      const double lhs = bessel_i(nu - 1, z) - bessel_i(nu + 1, z);
      const double rhs = 2 * nu / z * bessel_i(nu, z);
      EXPECT_NEAR(lhs / rhs, 1.0, 1e-10) << nu << " " << z;
    }
}

TEST(BesselK, MatchesHighPrecisionReference) {
  for (const auto& r : kK) EXPECT_NEAR(bessel_k(r.nu, r.z) / r.value, 1.0, 1e-12) << r.nu << " " << r.z;
}

TEST(BesselK, EvenInOrder) {
  for (double nu : {0.2, 1.5, 4.7})
    for (double z : {0.3, 2.0, 40.0}) EXPECT_DOUBLE_EQ(bessel_k(-nu, z), bessel_k(nu, z));
}

TEST(BesselK, Wronskian) {
  for (double nu : {0.0, 0.3, 1.0, 2.5, 7.4, 15.0})
    for (double z : {0.1, 0.9, 3.0, 12.0, 25.0, 60.0}) {
      const auto a = bessel_ik_scaled(nu, z);
      const auto b = bessel_ik_scaled(nu + 1, z);
      // The scale factors cancel in the products.
      const double w = a.i_scaled * b.k_scaled + b.i_scaled * a.k_scaled;
      EXPECT_NEAR(w * z, 1.0, 1e-12) << nu << " " << z;
    }
}

TEST(BesselK, ProductWithIDecreases) {
  for (double nu : {0.0, 1.0, 5.5}) {
    double prev = INFINITY;
    for (double z = 0.1; z < 100; z *= 1.5) {
      const auto s = bessel_ik_scaled(nu, z);
      const double v = s.i_scaled * s.k_scaled;
      EXPECT_LT(v, prev);
      prev = v;
    }
  }
}

TEST(BesselK, ComplexArgumentOnRealAxis) {
  for (double nu : {0.0, 0.5, 2.2})
    for (double z : {0.4, 3.0, 30.0}) {
      const auto c = bessel_k_scaled(nu, std::complex<double>(z, 0.0));
      EXPECT_NEAR(c.real() / bessel_k_scaled(nu, z), 1.0, 1e-12);
      EXPECT_NEAR(c.imag(), 0.0, 1e-12 * std::abs(c.real()));
    }
}

TEST(BesselK, ComplexHalfOrderClosedForm) {
  // e^w K_{1/2}(w) = sqrt(pi / (2 w)).
  for (auto w : {std::complex<double>(1, 2), std::complex<double>(0.3, -4), std::complex<double>(20, 15)}) {
    const auto expect = std::sqrt(M_PI / (2.0 * w));
    EXPECT_NEAR(std::abs(bessel_k_scaled(0.5, w) / expect - 1.0), 0.0, 1e-12);
  }
}

TEST(Specfun, DomainErrors) {
  EXPECT_THROW(bessel_i(1.0, 0.0), ValidationError);
  EXPECT_THROW(bessel_i(-0.5, 1.0), ValidationError);
  EXPECT_THROW(bessel_i(50.0, 1.0), ValidationError);
  EXPECT_THROW(bessel_k(1.0, -1.0), ValidationError);
  EXPECT_THROW(theta_hw(1.0, 0.01), ValidationError);
  EXPECT_THROW(theta_hw(1.0, 60.0), ValidationError);
}

TEST(Theta, NonNegativeOnWindow) {
  for (double r : {0.3, 1.0, 4.0})
    for (double t = kThetaMinTime; t <= kThetaMaxTime; t *= 1.7) EXPECT_GE(theta_hw(r, t), 0.0);
}

TEST(Theta, LaplaceTransformsGiveBesselI) {
  const auto c1 = laplace_check(1.0, 0.5);
  EXPECT_NEAR(c1.integral, 0.56515910399248502721, 1e-7);
  const auto c2 = laplace_check(1.0, 2.0);
  EXPECT_NEAR(c2.integral, 0.13574766976703828118, 1e-7);
}

TEST(Theta, LaplaceCheckGrid) {
  for (double r : {0.5, 1.0, 2.0})
    for (double lambda : {0.5, 1.0, 2.0}) EXPECT_NEAR(laplace_check(r, lambda).ratio, 1.0, 1e-6);
}

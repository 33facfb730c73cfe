#include <gtest/gtest.h>

#include <cmath>

#include "hypk/bessel.hpp"
#include "hypk/error.hpp"
#include "hypk/quadrature.hpp"

using namespace hypk;
using namespace hypk::bessel;

namespace {
double gauss(double d, double t) { return std::exp(-d * d / (2 * t)) / std::sqrt(2 * M_PI * t); }
}  // namespace

TEST(TransitionDensity, ReflectionOracleAtUnitPoint) {
  EXPECT_NEAR(transition_density(-0.5, 1, 1, 1), 0.34495131388824462599, 1e-14);
}

TEST(TransitionDensity, HighPrecisionReference) {
  EXPECT_NEAR(transition_density(-1.3, 0.7, 1.2, 0.9) / 0.29403489814351886591, 1.0, 1e-12);
}

TEST(TransitionDensity, ReflectionPrincipleGrid) {
  for (double t : {0.05, 0.5, 3.0})
    for (double x : {0.2, 1.0, 4.0})
      for (double y : {0.1, 0.9, 2.5}) {
        const double oracle = gauss(x - y, t) * -std::expm1(-2 * x * y / t);
        EXPECT_NEAR(transition_density(-0.5, t, x, y) / oracle, 1.0, 1e-10);
      }
}

TEST(TransitionDensity, DetailedBalance) {
  for (double nu : {-0.3, -1.0, -2.7})
    for (double t : {0.2, 1.5})
      for (auto [x, y] : {std::pair{0.5, 1.7}, std::pair{2.0, 0.3}, std::pair{1.0, 1.1}}) {
        const double lhs = transition_density(nu, t, x, y) / std::pow(y, 2 * nu + 1);
        const double rhs = transition_density(nu, t, y, x) / std::pow(x, 2 * nu + 1);
        EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
      }
}

TEST(TransitionDensity, SubMarkovMass) {
  for (double t : {0.1, 1.0, 20.0}) {
    quad::Options o;
    o.abs_tol = 1e-12;
    const auto r = quad::integrate_to_infinity([&](double y) { return y > 0 ? transition_density(-0.8, t, 1.0, y) : 0.0; }, 0.0, o);
    EXPECT_LE(r.value, 1.0 + 1e-10);
    if (t == 20.0) {
      EXPECT_LT(r.value, 0.9);
    }
  }
}

TEST(TransitionDensity, RejectsInvalidArguments) {
  EXPECT_THROW(transition_density(0.5, 1, 1, 1), ValidationError);
  EXPECT_THROW(transition_density(-0.5, 0, 1, 1), ValidationError);
  EXPECT_THROW(transition_density(-0.5, 1, -1, 1), ValidationError);
}

TEST(KilledBound, VanishesOnTheBoundary) {
  const auto b = killed_density_bound(-1.0, 1.0, 0.5, 1.0, 2.0);
  EXPECT_EQ(b.lower, 0.0);
  EXPECT_EQ(b.upper, 0.0);
  EXPECT_THROW(killed_density_bound(-1.0, 1.0, 0.5, 0.9, 2.0), ValidationError);
}

TEST(KilledBound, BracketUsesComparabilityConstant) {
  const double e = killed_density_expression(-1.2, 0.5, 0.7, 1.3, 2.2);
  const auto b = killed_density_bound(-1.2, 0.5, 0.7, 1.3, 2.2, 3.0);
  EXPECT_DOUBLE_EQ(b.lower, e / 3.0);
  EXPECT_DOUBLE_EQ(b.upper, e * 3.0);
}

TEST(KilledBound, FirstFactorSymmetric) {
  // With x = y the remaining factors coincide, so swapping (x - a) and (y - a) in
  // the first factor is tested through points with equal distance products.
  const double a = 1.0, t = 0.4;
  const double f1 = (1.5 - a) * (3.0 - a) / (t + (1.5 - a) * (3.0 - a));
  const double f2 = (3.0 - a) * (1.5 - a) / (t + (3.0 - a) * (1.5 - a));
  EXPECT_DOUBLE_EQ(f1, f2);
}

TEST(KilledBound, ComparableWithReflectionDensityNearZeroLevel) {
  double lo = INFINITY, hi = 0;
  for (double t : {0.01, 0.1, 1.0, 10.0})
    for (double x : {0.05, 0.5, 3.0})
      for (double y : {0.02, 0.7, 4.0}) {
        const double exact = gauss(x - y, t) - gauss(x + y, t);
        const double r = exact / killed_density_expression(-0.5, 1e-9, t, x, y);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
  EXPECT_GT(lo, 0.05);
  EXPECT_LT(hi, 20.0);
}

TEST(HittingBound, VanishesAtLevelAndComparableWithBrownianDensity) {
  EXPECT_THROW(hitting_density_bound(-0.5, 1.0, 0.3, 1.0), ValidationError);
  double lo = INFINITY, hi = 0;
  for (double t : {0.01, 0.1, 1.0, 10.0, 100.0})
    for (double x : {1.01, 1.5, 3.0, 8.0}) {
      const double exact = (x - 1.0) / (std::sqrt(2 * M_PI) * std::pow(t, 1.5)) *
                           std::exp(-(x - 1.0) * (x - 1.0) / (2 * t));
      const double r = exact / hitting_density_bound(-0.5, 1.0, t, x);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  EXPECT_NEAR(lo, 1.0 / std::sqrt(2 * M_PI), 1e-12);
  EXPECT_NEAR(hi, 1.0 / std::sqrt(2 * M_PI), 1e-12);
}

TEST(HittingBound, IntegrableInTime) {
  for (double nu : {-0.5, -1.5, -3.0}) {
    quad::Options o;
    o.abs_tol = 1e-10;
    const auto r = quad::integrate(
        [&](double u) { return hitting_density_bound(nu, 1.0, std::exp(u), 2.0) * std::exp(u); }, -12, 60, o);
    EXPECT_TRUE(std::isfinite(r.value));
    EXPECT_GT(r.value, 0.0);
  }
}

TEST(HittingDensity, BrownianClosedForm) {
  const auto r = hitting_density_numeric(-0.5, 1.0, 2.0, 1.0);
  EXPECT_NEAR(r.value, std::exp(-0.5) / std::sqrt(2 * M_PI), 1e-9);
  EXPECT_NEAR(r.cross_check, r.value, 1e-3);
}

TEST(HittingDensity, HighPrecisionInversionReference) {
  EXPECT_NEAR(hitting_density(-1.0, 1.0, 2.0, 1.0) / 0.30091627502789910803, 1.0, 1e-8);
  EXPECT_NEAR(hitting_density(-2.3, 0.5, 1.5, 0.4) / 1.2589921014379098149, 1.0, 1e-8);
}

TEST(HittingDensity, UnitMass) {
  for (double nu : {-0.5, -1.2, -3.0}) {
    quad::Options o;
    o.abs_tol = 1e-7;
    o.rel_tol = 1e-7;
    const auto r = quad::integrate(
        [&](double u) { return hitting_density(nu, 1.0, 2.5, std::exp(u)) * std::exp(u); }, -10, 70, o);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value, 1.0, 1e-4);
  }
}

TEST(HittingDensity, RatioToBoundStaysBounded) {
  double lo = INFINITY, hi = 0;
  for (double nu : {-0.7, -2.0})
    for (double t : {0.02, 0.2, 2.0, 20.0})
      for (double x : {1.1, 2.0, 5.0}) {
        // deep in the Gaussian tail the inverted density sits below the inversion noise
        if ((x - 1.0) * (x - 1.0) / (2 * t) > 8.0) continue;
        const double r = hitting_density(nu, 1.0, x, t) / hitting_density_bound(nu, 1.0, t, x);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
  EXPECT_GT(lo, 1e-2);
  EXPECT_LT(hi, 1e2);
}

TEST(HittingSurvival, BrownianClosedForm) {
  for (double t : {0.3, 1.0, 4.0})
    EXPECT_NEAR(hitting_survival_numeric(-0.5, 1.0, 2.0, t).value, std::erf(1.0 / std::sqrt(2 * t)), 1e-8);
}

TEST(KilledDensity, ImagesOracleForBrownianCase) {
  for (double t : {0.1, 0.5, 2.0})
    for (auto [x, y] : {std::pair{1.7, 1.4}, std::pair{1.2, 3.0}}) {
      const double oracle = gauss(x - y, t) - gauss(x + y - 2.0, t);
      EXPECT_NEAR(killed_density_numeric(-0.5, 1.0, t, x, y), oracle, 1e-4 * oracle + 1e-9);
    }
}

TEST(KilledDensity, BelowFreeDensityAndNonNegative) {
  for (double t : {0.05, 0.6, 5.0}) {
    const double k = killed_density_numeric(-1.4, 0.8, t, 1.5, 2.1);
    EXPECT_GE(k, -1e-8);
    EXPECT_LE(k, transition_density(-1.4, t, 1.5, 2.1));
  }
}

TEST(KilledDensity, RatioToExpressionBounded) {
  double lo = INFINITY, hi = 0;
  for (double t : {0.05, 0.5, 5.0})
    for (double x : {1.1, 2.0})
      for (double y : {1.05, 1.8, 3.5}) {
        const double r = killed_density_numeric(-1.3, 1.0, t, x, y) / killed_density_expression(-1.3, 1.0, t, x, y);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
  EXPECT_GT(lo, 1e-2);
  EXPECT_LT(hi, 1e2);
}

TEST(JointDensity, LognormalMarginal) {
  quad::Options o;
  o.abs_tol = 1e-9;
  o.rel_tol = 1e-7;
  const auto r = quad::integrate([](double w) {
    const double u = std::exp(w);
    return joint_density(-1.0, 1.0, 1.0, u, 1.0) * u;
  }, -12.0, 8.0, o);
  EXPECT_NEAR(r.value, std::exp(-0.5) / std::sqrt(2 * M_PI), 1e-5);
}

TEST(JointDensity, NonNegativeAndWindowChecked) {
  for (double u : {0.1, 1.0, 5.0})
    for (double v : {0.2, 1.0, 3.0}) EXPECT_GE(joint_density(-0.7, 1.3, 0.8, u, v), 0.0);
  EXPECT_THROW(joint_density(-1.0, 1.0, 0.01, 1.0, 1.0), ValidationError);
}

#include <gtest/gtest.h>

#include <cmath>

#include "hypk/error.hpp"
#include "hypk/theory.hpp"

using namespace hypk;
using namespace hypk::theory;

TEST(Eta, Examples) {
  EXPECT_DOUBLE_EQ(eta(1.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(eta(1.0, 1.5), 2.0);
  EXPECT_NEAR(eta(0.5, 4.0), 2.8722813232690143, 1e-15);
  EXPECT_THROW(eta(1.0, -0.1), ValidationError);
  EXPECT_THROW(eta(0.0, 1.0), ValidationError);
}

TEST(Reduction, Factors) {
  const HyperPoint x{0.5, 2.0}, y{0.3, 1.0};
  // mu - eta = -1 here
  EXPECT_DOUBLE_EQ(reduce_green(1.0, 1.5, x, y, 3.0), 1.5);
  EXPECT_DOUBLE_EQ(reduce_green(1.0, 0.0, x, y, 3.0), 3.0);
  EXPECT_DOUBLE_EQ(reduce_poisson(DomainSpec::slab(1, 1), 1.0, 1.5, x, HyperPoint{0.5, 1.0}, 4.0), 2.0);
  EXPECT_THROW(reduce_poisson(DomainSpec::half_space(1), 1.0, 1.5, x, HyperPoint{0.5, 1.0}, 4.0),
               ValidationError);
  EXPECT_NO_THROW(reduce_poisson(DomainSpec::half_space(1), 1.0, 0.0, x, HyperPoint{0.5, 1.0}, 4.0));
}

TEST(Generator, EigenfunctionsAndConstants) {
  const double mu = 1.0, lambda = 1.5, e = eta(mu, lambda);
  const HyperPoint x{0.3, 1.7};
  auto power = [](double p) { return [p](const HyperPoint& z) { return std::pow(z.height(), p); }; };
  const double v = apply_generator(mu, power(mu + e), x, default_step(x));
  EXPECT_NEAR(v, lambda * std::pow(1.7, mu + e), 1e-5);
  EXPECT_NEAR(apply_generator(mu, power(mu - e), x, default_step(x)), lambda * std::pow(1.7, mu - e), 1e-5);
  EXPECT_NEAR(apply_generator(mu, [](const HyperPoint&) { return 4.2; }, x, 0.01), 0.0, 1e-12);
  // x_1 is harmonic for every mu
  EXPECT_NEAR(apply_generator(2.3, [](const HyperPoint& z) { return z[0]; }, x, 0.01), 0.0, 1e-12);
  EXPECT_THROW(apply_generator(mu, power(2), x, 2.0), ValidationError);
}

TEST(Generator, SecondOrderAccuracy) {
  const double mu = 0.7;
  const HyperPoint x{0.2, 0.4, 1.3};
  auto f = [](const HyperPoint& z) { return std::sin(z[0]) * std::exp(z[1]) * std::log(z.height()); };
  // closed form of (1/2) Delta_mu f
  const double s = std::sin(0.2), ex = std::exp(0.4), l = std::log(1.3), xn = 1.3;
  const double lap = xn * xn * (-s * ex * l + s * ex * l + s * ex * (-1.0 / (xn * xn)));
  const double exact = 0.5 * (lap - (2 * mu - 1) * xn * s * ex / xn);
  const double e1 = std::abs(apply_generator(mu, f, x, 0.04) - exact);
  const double e2 = std::abs(apply_generator(mu, f, x, 0.02) - exact);
  EXPECT_GT(e1 / e2, 3.5);
  EXPECT_LT(e1 / e2, 4.5);
}

TEST(Dirichlet, UnitDataIsDeterministic) {
  sim::SimConfig cfg;
  cfg.n_paths = 500;
  const auto one = [](const HyperPoint&) { return 1.0; };
  const HyperPoint x{0.4, 1.6};
  const auto r0 = dirichlet_solve(DomainSpec::slab(1, 1), 1.0, 0.0, one, x, cfg);
  EXPECT_DOUBLE_EQ(r0.value, 1.0);
  EXPECT_DOUBLE_EQ(r0.std_error, 0.0);
  const auto r1 = dirichlet_solve(DomainSpec::slab(1, 1), 1.0, 1.5, one, x, cfg);
  EXPECT_NEAR(r1.value, std::pow(1.6, -1.0), 1e-14);
  EXPECT_DOUBLE_EQ(r1.harmonic_value, 1.0);
  EXPECT_THROW(dirichlet_solve(DomainSpec::half_space(1), 1.0, 0.0, one, x, cfg), ValidationError);
}

TEST(Dirichlet, LinearDataOnTheSides) {
  // x_1 is harmonic, so with f = y_1 on a strip the solution is x_1 up to horizon losses
  sim::SimConfig cfg;
  cfg.n_paths = 4000;
  const auto r = dirichlet_solve(DomainSpec::strip(1), 1.0, 0.0, [](const HyperPoint& z) { return z[0]; },
                                 HyperPoint{0.3, 1.0}, cfg);
  EXPECT_NEAR(r.value, 0.3, 3 * r.std_error + 0.01);
}

TEST(Scaling, IdentityDilationGivesZero) {
  sim::SimConfig cfg;
  cfg.n_paths = 2000;
  const kernels::FaceRegion reg{BoundaryFace::Bottom, {0.3}, {0.7}};
  const auto s = scaling_verify(DomainSpec::slab(1, 1), 1.0, 1.0, HyperPoint{0.5, 1.5}, HyperPoint{0.35, 1.3},
                                reg, cfg);
  EXPECT_EQ(s.green_z, 0.0);
  EXPECT_EQ(s.poisson_z, 0.0);
  EXPECT_EQ(s.green_base.value, s.green_scaled.value);
}

TEST(Scaling, DilationAgreesStatistically) {
  sim::SimConfig cfg;
  cfg.n_paths = 10000;
  const kernels::FaceRegion reg{BoundaryFace::Bottom, {0.3}, {0.7}};
  const auto s = scaling_verify(DomainSpec::slab(1, 1), 1.0, 2.0, HyperPoint{0.5, 1.5}, HyperPoint{0.35, 1.3},
                                reg, cfg);
  EXPECT_LT(std::abs(s.green_z), 4.0);
  EXPECT_LT(std::abs(s.poisson_z), 4.0);
}

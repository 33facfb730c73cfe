#include <gtest/gtest.h>

#include <cmath>

#include "hypk/error.hpp"
#include "hypk/kernels.hpp"
#include "hypk/quadrature.hpp"
#include "hypk/theory.hpp"

using namespace hypk;
using namespace hypk::kernels;

namespace {
double z(const KernelEstimate& a, const KernelEstimate& b) {
  return (a.value - b.value) / std::hypot(a.std_error, b.std_error);
}
}  // namespace

TEST(BallVolume, KnownDimensions) {
  EXPECT_NEAR(ball_volume(2, 1.0), M_PI, 1e-15);
  EXPECT_NEAR(ball_volume(3, 2.0), 4.0 / 3.0 * M_PI * 8.0, 1e-12);
}

TEST(JDensity, SeriesReference) {
  EXPECT_NEAR(j_density(0.1, 0.5, 0.5), 1.2445655330056030781, 1e-12);
  EXPECT_NEAR(j_density(0.5, 0.2, 0.7), 0.080560753693393339396, 1e-13);
  // below the crossover the images form is used
  EXPECT_NEAR(j_density(0.02, 0.3, 0.35), 2.6499623508768266544, 1e-12);
}

TEST(JDensity, Symmetries) {
  for (double t : {0.01, 0.1, 1.0})
    for (auto [x, y] : {std::pair{0.2, 0.7}, std::pair{0.05, 0.5}}) {
      EXPECT_NEAR(j_density(t, x, y), j_density(t, y, x), 1e-14);
      EXPECT_NEAR(j_density(t, x, y), j_density(t, 1 - x, 1 - y), 1e-13);
    }
}

TEST(JDensity, FormsAgreeAtCrossover) {
  for (auto [x, y] : {std::pair{0.2, 0.7}, std::pair{0.5, 0.5}, std::pair{0.01, 0.9}}) {
    const double series = j_density(kImagesCrossover, x, y, 60);
    const double auto_form = j_density(kImagesCrossover * (1 - 1e-12), x, y);
    EXPECT_NEAR(series, auto_form, 1e-12);
  }
}

TEST(JDensity, SubProbability) {
  for (double t : {0.01, 0.3, 2.0}) {
    const double m = quad::integrate([&](double y) { return j_density(t, 0.3, y); }, 1e-12, 1 - 1e-12).value;
    EXPECT_LE(m, 1.0 + 1e-12);
    EXPECT_NEAR(m, interval_survival(t, 0.3), 1e-9);
  }
  EXPECT_THROW(j_density(1e-7, 0.5, 0.5), ValidationError);
}

TEST(GammaExitDensity, ReferenceAndReflection) {
  EXPECT_NEAR(gamma_exit_density(0.3, 0.4, 0), 0.68973392326797956271, 1e-12);
  for (double t : {0.01, 0.2, 1.5}) EXPECT_DOUBLE_EQ(gamma_exit_density(t, 0.3, 0), gamma_exit_density(t, 0.7, 1));
}

TEST(GammaExitDensity, ExitProbabilities) {
  for (double x : {0.1, 0.5, 0.83}) {
    quad::Options o;
    o.abs_tol = 1e-12;
    auto f0 = [&](double u) { return gamma_exit_density(std::exp(u), x, 0) * std::exp(u); };
    auto f1 = [&](double u) { return gamma_exit_density(std::exp(u), x, 1) * std::exp(u); };
    const double p0 = quad::integrate(f0, std::log(2e-6), 6.0, o).value;
    const double p1 = quad::integrate(f1, std::log(2e-6), 6.0, o).value;
    EXPECT_NEAR(p0, 1 - x, 1e-8);
    EXPECT_NEAR(p0 + p1, 1.0, 1e-8);
  }
}

TEST(Quadrature, SlabFaceMassesSumToOne) {
  const auto m = slab_face_masses(1.0, 1.0, HyperPoint{0.3, 1.7});
  EXPECT_NEAR(m[0] + m[1] + m[2], 1.0, 1e-3);
}

TEST(Quadrature, SlabGreenVanishesAtSide) {
  const HyperPoint y{0.5, 1.6};
  const double inner = slab_green_quadrature(1.0, 1.0, HyperPoint{0.3, 1.5}, y);
  const double edge = slab_green_quadrature(1.0, 1.0, HyperPoint{1e-3, 1.5}, y);
  EXPECT_LT(edge, 0.02 * inner);
}

TEST(Quadrature, ScalingRelation) {
  const auto dom = DomainSpec::slab(0.5, 2.0);
  const HyperPoint x{1.0, 1.5}, y{0.6, 1.1};
  const double g = green_quadrature(dom, 0.8, x, y);
  const double g1 = slab_green_quadrature(0.8, 0.25, HyperPoint{0.5, 0.75}, HyperPoint{0.3, 0.55});
  EXPECT_NEAR(g, g1 / 4.0, 1e-12 * g1);
}

TEST(MonteCarlo, GreenMatchesQuadrature) {
  const auto dom = DomainSpec::slab(1, 1);
  const HyperPoint x{0.5, 2.0};
  sim::SimConfig cfg;
  cfg.n_paths = 20000;
  cfg.eps_ball = 0.05;
  for (const HyperPoint& y : {HyperPoint{0.4, 1.6}, HyperPoint{0.7, 2.4}}) {
    const auto e = estimate_green(dom, 1.0, 0.0, x, y, cfg);
    const double q = green_quadrature(dom, 1.0, x, y);
    // the ball average differs from the point value by O(eps^2)
    EXPECT_NEAR(e.value, q, 3 * e.std_error + 0.02 * q);
  }
}

TEST(MonteCarlo, PoissonRegionMatchesQuadratureAverage) {
  const auto dom = DomainSpec::slab(1, 1);
  const HyperPoint x{0.5, 2.0};
  sim::SimConfig cfg;
  cfg.n_paths = 20000;
  const FaceRegion r{BoundaryFace::Bottom, {0.3}, {0.6}};
  const auto e = estimate_poisson(dom, 1.0, 0.0, x, r, cfg);
  double avg = 0.0;
  for (int k = 0; k < 6; ++k) avg += poisson_quadrature(dom, 1.0, x, HyperPoint{0.3 + 0.05 * (k + 0.5), 1.0}) / 6;
  EXPECT_NEAR(e.value, avg, 3 * e.std_error + 0.01 * avg);
}

TEST(MonteCarlo, FacePartitionHasUnitMass) {
  const auto dom = DomainSpec::slab(1, 1);
  sim::SimConfig cfg;
  cfg.n_paths = 5000;
  const HyperPoint x{0.4, 1.5};
  const auto outs = sim::simulate_exits(sim::PathKind::Hbm, dom, 0.8, x, cfg);
  const FaceRegion parts[] = {{BoundaryFace::Bottom, {0.0}, {1.0}},
                              {BoundaryFace::SideLow, {1.0}, {1e9}},
                              {BoundaryFace::SideHigh, {1.0}, {1e9}}};
  double mass = 0.0;
  for (const auto& p : parts) mass += poisson_from_outcomes(outs, p, 0.8, 0.0).value * p.volume();
  EXPECT_NEAR(mass, 1.0, 1e-9);
}

TEST(MonteCarlo, MirrorRegionsAgree) {
  const auto dom = DomainSpec::slab(1, 1);
  sim::SimConfig cfg;
  cfg.n_paths = 20000;
  const HyperPoint x{0.5, 1.8};
  const std::vector<FaceRegion> regs{{BoundaryFace::SideLow, {1.5}, {2.0}}, {BoundaryFace::SideHigh, {1.5}, {2.0}}};
  const auto e = estimate_poisson_many(dom, 1.0, 0.0, x, regs, cfg);
  EXPECT_LT(std::abs(z(e[0], e[1])), 3.0);
}

TEST(MonteCarlo, LambdaContinuityAndDomainMonotonicity) {
  const HyperPoint x{0.5, 1.5}, y{0.45, 1.3};
  sim::SimConfig cfg;
  cfg.n_paths = 8000;
  cfg.eps_ball = 0.05;
  const auto slab = DomainSpec::slab(1, 1);
  const auto g0 = estimate_green(slab, 1.0, 0.0, x, y, cfg);
  const auto g6 = estimate_green(slab, 1.0, 1e-6, x, y, cfg);
  EXPECT_NEAR(g0.value, g6.value, g0.std_error);
  cfg.seed = 9;
  const auto strip = estimate_green(DomainSpec::strip(1), 1.0, 0.0, x, y, cfg);
  EXPECT_LT(z(g0, strip), 3.0);
}

TEST(MonteCarlo, ScalingOfGreen) {
  const auto dom = DomainSpec::slab(1, 1);
  sim::SimConfig cfg;
  cfg.n_paths = 20000;
  cfg.eps_ball = 0.05;
  const auto g = estimate_green(dom, 1.0, 0.0, HyperPoint{0.5, 1.5}, HyperPoint{0.4, 1.3}, cfg);
  cfg.eps_ball = 0.1;
  cfg.seed = 1234;
  auto g2 = estimate_green(scale_domain(dom, 2), 1.0, 0.0, HyperPoint{1.0, 3.0}, HyperPoint{0.8, 2.6}, cfg);
  g2.value *= 4;
  g2.std_error *= 4;
  EXPECT_LT(std::abs(z(g, g2)), 3.0);
}

TEST(MonteCarlo, ReductionIdentityForGreen) {
  const auto dom = DomainSpec::slab(1, 1);
  const double mu = 1.0, lambda = 1.5, eta = theory::eta(mu, lambda);
  const HyperPoint x{0.5, 1.5}, y{0.5, 1.25};
  sim::SimConfig cfg;
  cfg.n_paths = 20000;
  cfg.eps_ball = 0.05;
  GreenOptions go;
  go.half_ball = false;
  const auto direct = estimate_green(dom, mu, lambda, x, y, cfg, go);
  go.weight_power = eta - mu;
  cfg.seed = 5;
  auto reduced = estimate_green(dom, eta, 0.0, x, y, cfg, go);
  const double f = std::pow(x.height(), mu - eta);
  reduced.value *= f;
  reduced.std_error *= f;
  EXPECT_LT(std::abs(z(direct, reduced)), 3.0);
}

TEST(MonteCarlo, HalfSpaceSurrogateIsFlagged) {
  sim::SimConfig cfg;
  cfg.n_paths = 500;
  const FaceRegion r{BoundaryFace::Bottom, {-0.5}, {0.5}};
  const auto e = estimate_poisson(DomainSpec::half_space(1), 1.0, 0.5, HyperPoint{0.0, 1.5}, r, cfg);
  EXPECT_TRUE(e.surrogate);
  const auto e0 = estimate_poisson(DomainSpec::half_space(1), 1.0, 0.0, HyperPoint{0.0, 1.5}, r, cfg);
  EXPECT_FALSE(e0.surrogate);
}

TEST(MonteCarlo, GreenPreconditions) {
  sim::SimConfig cfg;
  cfg.eps_ball = 0.2;
  const auto dom = DomainSpec::slab(1, 1);
  EXPECT_THROW(estimate_green(dom, 1.0, 0.0, HyperPoint{0.5, 2}, HyperPoint{0.1, 2}, cfg), ValidationError);
  cfg.eps_ball = 0.05;
  EXPECT_THROW(estimate_green(dom, 1.0, 0.0, HyperPoint{0.5, 2}, HyperPoint{0.5, 2}, cfg), ValidationError);
  GreenOptions go;
  go.kind = sim::PathKind::BrownBessel;
  EXPECT_THROW(estimate_green(dom, 1.0, 0.5, HyperPoint{0.5, 2}, HyperPoint{0.4, 2}, cfg, go), ValidationError);
}

TEST(MonteCarlo, NearDiagonalFlag) {
  sim::SimConfig cfg;
  cfg.n_paths = 200;
  cfg.eps_ball = 0.05;
  const auto e = estimate_green(DomainSpec::slab(1, 1), 1.0, 0.0, HyperPoint{0.5, 2}, HyperPoint{0.5, 2.1}, cfg);
  EXPECT_TRUE(e.near_diagonal);
}

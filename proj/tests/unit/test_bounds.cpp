#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hypk/bounds.hpp"
#include "hypk/error.hpp"

using namespace hypk;
using namespace hypk::bounds;

namespace {
HyperPoint scaled(const HyperPoint& p, double c) { return scale_point(p, c); }
HyperPoint mirrored(const HyperPoint& p, double b) {
  std::vector<double> v(p.coords().begin(), p.coords().end());
  v[0] = b - v[0];
  return HyperPoint(v);
}
}  // namespace

TEST(GreenBounds, DiagonalIsInfinite) {
  const HyperPoint x{0.4, 2.0};
  EXPECT_TRUE(std::isinf(green_bound_slab(1.0, 2, 1.0, 1.0, x, x)));
  EXPECT_TRUE(std::isinf(green_bound_strip(1.0, 2, 1.0, x, x)));
  EXPECT_TRUE(std::isinf(green_bound_halfspace(1.0, 2, 1.0, x, x)));
}

TEST(GreenBounds, DilationScaling) {
  const HyperPoint x{0.3, 0.2, 1.7}, y{0.6, 0.1, 1.4};
  for (double mu : {0.6, 1.0, 2.5})
    for (double c : {0.1, 3.0}) {
      const double base = green_bound_slab(mu, 3, 1.0, 1.0, x, y);
      const double sc = green_bound_slab(mu, 3, c, c, scaled(x, c), scaled(y, c));
      EXPECT_NEAR(std::pow(c, 3) * sc, base, 1e-12 * base);
      const double sb = green_bound_strip(mu, 3, 1.0, x, y);
      EXPECT_NEAR(std::pow(c, 3) * green_bound_strip(mu, 3, c, scaled(x, c), scaled(y, c)), sb, 1e-12 * sb);
    }
}

TEST(GreenBounds, ReflectionAcrossMidplane) {
  const HyperPoint x{0.3, 1.7}, y{0.8, 1.4};
  for (double mu : {0.6, 2.0}) {
    EXPECT_NEAR(green_bound_slab(mu, 2, 1.0, 1.0, x, y),
                green_bound_slab(mu, 2, 1.0, 1.0, mirrored(x, 1), mirrored(y, 1)), 1e-14);
    const HyperPoint ys{0.0, 1.3};
    EXPECT_NEAR(poisson_bound_slab(mu, 2, 1.0, 1.0, x, ys, BoundaryFace::SideLow),
                poisson_bound_slab(mu, 2, 1.0, 1.0, mirrored(x, 1), mirrored(ys, 1), BoundaryFace::SideHigh),
                1e-14);
  }
}

TEST(GreenBounds, VanishesAtTheBoundary) {
  const HyperPoint y{0.5, 1.5};
  const double inner = green_bound_slab(1.0, 2, 1.0, 1.0, HyperPoint{0.5, 1.8}, y);
  EXPECT_LT(green_bound_slab(1.0, 2, 1.0, 1.0, HyperPoint{1e-6, 1.8}, y), 1e-4 * inner);
  EXPECT_LT(green_bound_slab(1.0, 2, 1.0, 1.0, HyperPoint{0.5, 1.0 + 1e-6}, y), 1e-4 * inner);
}

TEST(GreenBounds, StripIsTheBottomlessLimit) {
  const HyperPoint x{0.3, 0.9}, y{0.7, 0.4};
  for (double mu : {0.6, 1.0, 2.0}) {
    const double strip = green_bound_strip(mu, 2, 1.0, x, y);
    EXPECT_NEAR(green_bound_slab(mu, 2, 1e-12, 1.0, x, y), strip, 1e-9 * strip);
  }
}

TEST(GreenBounds, HalfSpaceIsTheWideLimit) {
  const double b = 1e8;
  const HyperPoint x{0.2, 1.7}, y{-0.4, 1.2};
  const HyperPoint xs{0.2 + b / 2, 1.7}, ys{-0.4 + b / 2, 1.2};
  for (double mu : {0.6, 1.0, 2.0}) {
    const double hs = green_bound_halfspace(mu, 2, 1.0, x, y);
    EXPECT_NEAR(green_bound_slab(mu, 2, 1.0, b, xs, ys), hs, 1e-6 * hs);
  }
}

TEST(GreenBounds, RejectsPointsOutsideTheDomain) {
  EXPECT_THROW(green_bound_slab(1.0, 2, 1.0, 1.0, HyperPoint{1.2, 2}, HyperPoint{0.5, 2}), ValidationError);
  EXPECT_THROW(green_bound_slab(1.0, 2, 1.0, 1.0, HyperPoint{0.5, 0.9}, HyperPoint{0.5, 2}), ValidationError);
  EXPECT_THROW(green_bound_slab(0.0, 2, 1.0, 1.0, HyperPoint{0.5, 1.5}, HyperPoint{0.5, 2}), ValidationError);
  EXPECT_THROW(green_bound_slab(1.0, 3, 1.0, 1.0, HyperPoint{0.5, 1.5}, HyperPoint{0.5, 2}), ValidationError);
}

TEST(PoissonBounds, FaceMembershipIsChecked) {
  const HyperPoint x{0.4, 1.5};
  EXPECT_THROW(poisson_bound_slab(1.0, 2, 1.0, 1.0, x, HyperPoint{0.1, 1.3}, BoundaryFace::SideLow),
               ValidationError);
  EXPECT_THROW(poisson_bound_slab(1.0, 2, 1.0, 1.0, x, HyperPoint{0.5, 1.3}, BoundaryFace::Bottom),
               ValidationError);
  EXPECT_THROW(poisson_bound_halfspace(1.0, 2, 1.0, x, HyperPoint{0.5, 1.3}), ValidationError);
  EXPECT_GT(poisson_bound_slab(1.0, 2, 1.0, 1.0, x, HyperPoint{1.0, 1.3}, BoundaryFace::SideHigh), 0.0);
}

TEST(PoissonBounds, DilationScaling) {
  const HyperPoint x{0.3, 1.7};
  const HyperPoint ybot{0.6, 1.0}, yside{0.0, 1.4};
  for (double c : {0.2, 5.0}) {
    const double pb = poisson_bound_slab(1.5, 2, 1.0, 1.0, x, ybot, BoundaryFace::Bottom);
    const double pbc = poisson_bound_slab(1.5, 2, c, c, scaled(x, c), scaled(ybot, c), BoundaryFace::Bottom);
    EXPECT_NEAR(c * pbc, pb, 1e-12 * pb);
    const double ps = poisson_bound_slab(1.5, 2, 1.0, 1.0, x, yside, BoundaryFace::SideLow);
    const double psc = poisson_bound_slab(1.5, 2, c, c, scaled(x, c), scaled(yside, c), BoundaryFace::SideLow);
    EXPECT_NEAR(c * psc, ps, 1e-12 * ps);
  }
}

TEST(PoissonBounds, LimitsOfTheSlabExpression) {
  const HyperPoint x{0.3, 0.9}, yside{0.0, 0.6};
  for (double mu : {0.6, 2.0}) {
    const double strip = poisson_bound_strip(mu, 2, 1.0, x, yside, BoundaryFace::SideLow);
    EXPECT_NEAR(poisson_bound_slab(mu, 2, 1e-12, 1.0, x, yside, BoundaryFace::SideLow), strip, 1e-9 * strip);
    // the slab bottom expression keeps a constant that the strip form drops
    const double a = 1e-9;
    const double sb = poisson_bound_strip(mu, 2, 1.0, x, HyperPoint{0.6, 1.0}, BoundaryFace::Bottom);
    const double slab = poisson_bound_slab(mu, 2, a, 1.0, x, HyperPoint{0.6, a}, BoundaryFace::Bottom);
    EXPECT_NEAR(slab / sb, std::pow(2.0, mu - 0.5), 1e-6);
  }
}

TEST(WFactor, ComparableToClosedForm) {
  double lo = 1e300, hi = 0.0;
  for (double x1 : {1e-4, 0.01, 0.3, 0.5, 0.97})
    for (double y1 : {1e-3, 0.2, 0.5, 0.999})
      for (double sep : {0.0, 1e-3, 0.1, 2.0, 50.0}) {
        const HyperPoint x{x1, 1.0}, y{y1, 1.0 + sep};
        if (x == y) continue;
        const double r = w_factor(x, y) / w_estimate(x, y);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        EXPECT_NEAR(w_factor(x, y), w_factor(y, x), 1e-12 * w_factor(x, y));
        EXPECT_NEAR(w_factor(x, y), w_factor(mirrored(x, 1), mirrored(y, 1)), 1e-9 * w_factor(x, y));
      }
  EXPECT_GT(lo, 0.05);
  EXPECT_LT(hi, 20.0);
}

TEST(Lemma, MacdonaldClosedForm) {
  LemmaParams p;
  p.beta = 0.5;
  p.b = 1.0;
  EXPECT_NEAR(lemma_macdonald(0.5, 1.0), 0.10832122937756451532, 1e-14);
  EXPECT_NEAR(lemma_lhs(p), 0.10832122937756451532, 1e-12);
  for (double beta : {0.5, 1.3, 3.0})
    for (double b : {1e-3, 0.4, 20.0}) {
      p.beta = beta;
      p.b = b;
      const double m = lemma_macdonald(beta, b);
      EXPECT_NEAR(lemma_lhs(p), m, 1e-9 * m);
    }
}

TEST(Lemma, ReferenceValues) {
  LemmaParams p;
  p.alpha = 1;
  p.beta = 1;
  p.gamma = {0.5};
  p.a = {2};
  p.b = 0.7;
  EXPECT_NEAR(lemma_lhs(p), 0.77566273128387670431, 1e-10);
  p.alpha = 2.5;
  p.beta = 2;
  p.gamma = {1, -0.4};
  p.a = {0.01, 30};
  p.b = 3;
  EXPECT_NEAR(lemma_lhs(p), 0.0018990757112127300709, 1e-13);
}

TEST(Lemma, MonotoneInShifts) {
  LemmaParams p;
  p.alpha = 1;
  p.beta = 1;
  p.gamma = {0.7};
  p.b = 0.5;
  double prev = 1e300;
  for (double a : {1e-3, 0.1, 1.0, 10.0}) {
    p.a = {a};
    const double v = lemma_lhs(p);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Lemma, RightSideIgnoresOrdering) {
  LemmaParams p;
  p.alpha = 1;
  p.beta = 1.5;
  p.gamma = {0.3, 1.2, -0.2};
  p.a = {0.5, 4.0, 0.01};
  p.b = 2.0;
  LemmaParams q = p;
  q.gamma = {-0.2, 0.3, 1.2};
  q.a = {0.01, 0.5, 4.0};
  EXPECT_NEAR(lemma_rhs(p), lemma_rhs(q), 1e-15 * lemma_rhs(p));
  EXPECT_NEAR(lemma_lhs(p), lemma_lhs(q), 1e-10 * lemma_lhs(p));
}

TEST(Lemma, ParameterValidation) {
  LemmaParams p;
  p.gamma = {-0.6};
  p.a = {1.0};
  EXPECT_THROW(p.validate(), ValidationError);
  EXPECT_THROW(lemma_lhs(p), ValidationError);
  p.gamma = {-0.3, -0.1};
  p.a = {1.0, 2.0};
  EXPECT_THROW(p.validate(), ValidationError);
  p.gamma = {-0.3};
  p.a = {1.0};
  EXPECT_NO_THROW(p.validate());
  EXPECT_TRUE(std::isfinite(lemma_lhs(p)));
  p.beta = 0.4;
  EXPECT_THROW(p.validate(), ValidationError);
}

TEST(Lemma, CertificationIsDeterministic) {
  std::vector<LemmaParams> grid;
  for (double b : {0.01, 1.0, 10.0}) {
    LemmaParams p;
    p.alpha = 1;
    p.beta = 1;
    p.gamma = {0.5};
    p.a = {0.3};
    p.b = b;
    grid.push_back(p);
  }
  const auto r1 = lemma_certify(grid);
  const auto r2 = lemma_certify(grid);
  ASSERT_EQ(r1.points.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r1.points[i].ratio, r2.points[i].ratio);
  EXPECT_GT(r1.inf_ratio, 0.0);
  EXPECT_LT(r1.refinement_delta, 1e-6);
  EXPECT_LE(r1.inf_ratio, r1.sup_ratio);
}

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypk/error.hpp"
#include "hypk/geometry.hpp"

using namespace hypk;

TEST(HyperPoint, RejectsNonPositiveHeightAndLowDimension) {
  EXPECT_THROW(HyperPoint({0.5, 0.0}), ValidationError);
  EXPECT_THROW(HyperPoint({0.5, -1.0}), ValidationError);
  EXPECT_THROW(HyperPoint(std::vector<double>{1.0}), ValidationError);
  EXPECT_NO_THROW(HyperPoint({0.5, 1e-300}));
}

TEST(HyperbolicDistance, ZeroOnDiagonal) {
  const HyperPoint x{0.3, 0.1, 2.0};
  EXPECT_EQ(hyperbolic_distance(x, x), 0.0);
}

TEST(HyperbolicDistance, VerticalGeodesicIsLogRatio) {
  const HyperPoint x{0.0, 1.0}, y{0.0, 2.0};
  EXPECT_NEAR(hyperbolic_distance(x, y), std::log(2.0), 1e-15);
  EXPECT_NEAR(cosh_distance(x, y), 1.25, 1e-15);
}

TEST(HyperbolicDistance, NearlyCoincidentPointsKeepRelativeAccuracy) {
  // d ~ |x - y| / x_n for nearby points.
  const HyperPoint x{0.0, 2.0}, y{1e-10, 2.0};
  EXPECT_NEAR(hyperbolic_distance(x, y) / 5e-11, 1.0, 1e-9);
}

TEST(HyperbolicDistance, DimensionMismatchThrows) {
  EXPECT_THROW(hyperbolic_distance(HyperPoint{0, 1}, HyperPoint{0, 0, 1}), ValidationError);
}

TEST(HyperbolicDistance, SymmetryTriangleAndCoshIdentity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2, 2), h(0.05, 4);
  for (int i = 0; i < 2000; ++i) {
    const HyperPoint x{u(rng), u(rng), h(rng)}, y{u(rng), u(rng), h(rng)}, z{u(rng), u(rng), h(rng)};
    const double dxy = hyperbolic_distance(x, y);
    EXPECT_DOUBLE_EQ(dxy, hyperbolic_distance(y, x));
    EXPECT_LE(dxy, hyperbolic_distance(x, z) + hyperbolic_distance(z, y) + 1e-12);
    const double expect = 1.0 + euclidean_distance_squared(x, y) / (2.0 * x.height() * y.height());
    EXPECT_NEAR(cosh_distance(x, y) / expect - 1.0, 0.0, 4e-16);
  }
}

TEST(ShiftedPoint, LowersOnlyTheLastCoordinate) {
  const auto s = shifted_point(HyperPoint{0.5, 3.0}, 1.0);
  EXPECT_EQ(s, (HyperPoint{0.5, 2.0}));
  const HyperPoint x{0.2, -1.0, 1.7};
  const auto t = shifted_point(x, 1e-12);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(t[i], x[i], 1e-11);
  EXPECT_THROW(shifted_point(HyperPoint{0.5, 1.0}, 1.0), ValidationError);
}

TEST(Delta, DistanceToComplement) {
  EXPECT_DOUBLE_EQ(delta(1.0, 0.3), 0.3);
  EXPECT_DOUBLE_EQ(delta(1.0, 0.7), 1.0 - 0.7);
  EXPECT_DOUBLE_EQ(delta(2.0, 1.5), 0.5);
  EXPECT_THROW(delta(1.0, 1.0), ValidationError);
  EXPECT_THROW(delta(1.0, -0.1), ValidationError);
}

TEST(Delta, ComparableWithProductForm) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uu(0.01, 10.0), f(1e-6, 1 - 1e-6);
  for (int i = 0; i < 5000; ++i) {
    const double u = uu(rng);
    const double w = f(rng) * u;
    const double prod = w * (u - w) / u;
    EXPECT_LE(prod, delta(u, w) * (1 + 1e-15));
    EXPECT_LE(delta(u, w), 2.0 * prod * (1 + 1e-15));
  }
}

TEST(Classify, SlabFacesAndOutside) {
  const auto slab = DomainSpec::slab(1, 1);
  EXPECT_TRUE(classify(HyperPoint{0.5, 2.0}, slab).interior());
  const auto side = classify(HyperPoint{0.0, 2.0}, slab);
  ASSERT_EQ(side.kind, Location::Kind::OnFace);
  EXPECT_EQ(*side.face, BoundaryFace::SideLow);
  const auto high = classify(HyperPoint{1.0 - 1e-14, 2.0}, slab);
  ASSERT_EQ(high.kind, Location::Kind::OnFace);
  EXPECT_EQ(*high.face, BoundaryFace::SideHigh);
  const auto bottom = classify(HyperPoint{0.4, 1.0}, slab);
  ASSERT_EQ(bottom.kind, Location::Kind::OnFace);
  EXPECT_EQ(*bottom.face, BoundaryFace::Bottom);
  EXPECT_EQ(classify(HyperPoint{1.5, 2.0}, slab).kind, Location::Kind::Outside);
  EXPECT_EQ(classify(HyperPoint{0.5, 0.5}, DomainSpec::half_space(1)).kind, Location::Kind::Outside);
  EXPECT_TRUE(classify(HyperPoint{0.5, 1e-6}, DomainSpec::strip(1)).interior());
}

TEST(Domain, InvariantsAndFaces) {
  EXPECT_THROW(DomainSpec::slab(0, 1), ValidationError);
  EXPECT_THROW(DomainSpec::slab(1, 0), ValidationError);
  EXPECT_THROW(DomainSpec::half_space(-1), ValidationError);
  EXPECT_TRUE(DomainSpec::slab(1, 1).has_face(BoundaryFace::Bottom));
  EXPECT_FALSE(DomainSpec::half_space(1).has_face(BoundaryFace::SideLow));
  EXPECT_TRUE(DomainSpec::strip(1).has_face(BoundaryFace::SideHigh));
}

TEST(ScaleDomain, MapsAndGroupLaw) {
  EXPECT_EQ(scale_domain(DomainSpec::slab(1, 1), 2), DomainSpec::slab(2, 2));
  EXPECT_EQ(scale_domain(DomainSpec::half_space(1), 0.5), DomainSpec::half_space(0.5));
  const auto d = DomainSpec::slab(0.7, 1.3);
  const auto back = scale_domain(scale_domain(d, 3.0), 1.0 / 3.0);
  EXPECT_NEAR(back.a, d.a, 1e-15);
  EXPECT_NEAR(back.b, d.b, 1e-15);
  EXPECT_EQ(scale_domain(DomainSpec::strip(2), 0.25), DomainSpec::strip(0.5));
}

TEST(ParseFace, KnownNamesAndRejection) {
  EXPECT_EQ(parse_face("bottom"), BoundaryFace::Bottom);
  EXPECT_EQ(parse_face("side_low"), BoundaryFace::SideLow);
  EXPECT_EQ(parse_face(to_string(BoundaryFace::SideHigh)), BoundaryFace::SideHigh);
  EXPECT_THROW(parse_face("top"), ValidationError);
}

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hypk/geometry.hpp"
#include "hypk/simulate.hpp"

namespace hypk::kernels {

struct KernelEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_paths = 0;
  double lambda = 0.0;
  double mu = 0.0;
  /// Green only: the same estimator with half the ball radius, for the ball-bias check.
  double half_ball_value = 0.0;
  double half_ball_std_error = 0.0;
  /// Green only: |value - half_ball_value| exceeds two combined standard errors.
  bool ball_bias = false;
  /// Green only: |x - y| < 5 eps, the ball average is a poor point value.
  bool near_diagonal = false;
  /// Poisson only: half-space with lambda > 0 reports x_n^{mu-eta} P^{(eta)} instead.
  bool surrogate = false;
};

struct GreenOptions {
  sim::PathKind kind = sim::PathKind::Hbm;
  /// Additional occupation weight (last coordinate)^p, used by the drift-change identity.
  double weight_power = 0.0;
  bool half_ball = true;
};

/// Lebesgue volume of a Euclidean ball of radius r in R^n.
double ball_volume(std::size_t n, double r);

/// Ball average of G^{(mu),lambda}_U(x, .) around y with radius cfg.eps_ball.
KernelEstimate estimate_green(const DomainSpec& dom, double mu, double lambda, const HyperPoint& x,
                              const HyperPoint& y, const sim::SimConfig& cfg,
                              const GreenOptions& opt = {});

/// One simulation, many ball centres (each with its own radius).
std::vector<KernelEstimate> estimate_green_many(const DomainSpec& dom, double mu, double lambda,
                                                const HyperPoint& x,
                                                std::span<const sim::Ball> balls,
                                                const sim::SimConfig& cfg,
                                                const GreenOptions& opt = {});

/// Axis-aligned box on one face, over the n-1 coordinates that vary on it
/// (x_2..x_n on side faces, x_1..x_{n-1} on the bottom).
struct FaceRegion {
  BoundaryFace face = BoundaryFace::Bottom;
  std::vector<double> lower;
  std::vector<double> upper;

  double volume() const;
  bool contains(const HyperPoint& y) const;
};

struct PoissonOptions {
  sim::PathKind kind = sim::PathKind::Hbm;
  /// Exit mass weighted by (exit height)^p, used by the drift-change identity.
  double weight_power = 0.0;
};

/// Region average of P^{(mu),lambda}_U(x, .) over a face region.
KernelEstimate estimate_poisson(const DomainSpec& dom, double mu, double lambda,
                                const HyperPoint& x, const FaceRegion& region,
                                const sim::SimConfig& cfg, const PoissonOptions& opt = {});

std::vector<KernelEstimate> estimate_poisson_many(const DomainSpec& dom, double mu, double lambda,
                                                  const HyperPoint& x,
                                                  std::span<const FaceRegion> regions,
                                                  const sim::SimConfig& cfg,
                                                  const PoissonOptions& opt = {});

/// Estimators over an existing ensemble of outcomes.
std::vector<KernelEstimate> green_from_outcomes(std::span<const sim::PathOutcome> outcomes,
                                                std::span<const sim::Ball> balls, double mu,
                                                double lambda);
KernelEstimate poisson_from_outcomes(std::span<const sim::PathOutcome> outcomes,
                                     const FaceRegion& region, double mu, double lambda,
                                     double weight_power = 0.0);

/// Fractions of exits through each face (SideLow, SideHigh, Bottom) and of paths
/// that did not exit; entries sum to one.
struct ExitFractions {
  std::array<double, 3> face{};
  std::array<double, 3> std_error{};
  double not_exited = 0.0;
};
ExitFractions exit_fractions(std::span<const sim::PathOutcome> outcomes);

// --- one-dimensional Brownian motion on (0, 1) ---------------------------------

/// Transition density of Brownian motion killed on leaving (0, 1).
/// terms = 0 selects automatic truncation.
double j_density(double t, double x1, double y1, int terms = 0);

/// Density of the exit time through `endpoint` (0 or 1) for Brownian motion on (0, 1).
double gamma_exit_density(double t, double x1, int endpoint, int terms = 0);

/// P^{x1}(no exit from (0, 1) before t).
double interval_survival(double t, double x1);

/// Below this time the method-of-images forms replace the sine series.
inline constexpr double kImagesCrossover = 0.05;

// --- semi-analytic integrals for the width-one slab -----------------------------

/// G^{(mu)}_{S_{a,1}}(x, y) by time quadrature of the product density.
double slab_green_quadrature(double mu, double a, const HyperPoint& x, const HyperPoint& y);

/// P^{(mu)}_{S_{a,1}}(x, y) for y on a side face (y_1 in {0, 1}) or the bottom (y_n = a).
double slab_poisson_quadrature(double mu, double a, const HyperPoint& x, const HyperPoint& y);

/// Same integrals for the strip S_{0,1} (no killing level) and the half-space D_a
/// (no interval factor).
double strip_green_quadrature(double mu, const HyperPoint& x, const HyperPoint& y);
double halfspace_green_quadrature(double mu, double a, const HyperPoint& x, const HyperPoint& y);

/// Green function for general b through the scaling relation G_{S_{a,b}}(x,y) = b^{-n} G_{S_{a/b,1}}(x/b, y/b).
double green_quadrature(const DomainSpec& dom, double mu, const HyperPoint& x,
                        const HyperPoint& y);
double poisson_quadrature(const DomainSpec& dom, double mu, const HyperPoint& x,
                          const HyperPoint& y);

/// Exit probabilities through (SideLow, SideHigh, Bottom) for S_{a,1}, computed by
/// integrating first-passage densities against survival functions.
std::array<double, 3> slab_face_masses(double mu, double a, const HyperPoint& x);

}  // namespace hypk::kernels

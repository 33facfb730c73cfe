#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hypk/geometry.hpp"

namespace hypk::sim {

struct SimConfig {
  double dt = 1e-3;
  double t_max = 100.0;
  std::int64_t n_paths = 10000;
  std::uint64_t seed = 1;
  double eps_ball = 0.05;

  /// Throws ValidationError unless dt <= 1e-2, t_max / dt <= 1e7, eps_ball > 0.
  void validate() const;
};

using Rng = std::mt19937_64;

/// Independent stream for path `index`, derived from the master seed by a
/// splitmix64 counter hash. The same (seed, index) always gives the same stream.
Rng make_path_rng(std::uint64_t seed, std::uint64_t index);

/// Mixes a master seed with a label so that related runs get unrelated seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label);

enum class PathKind {
  Hbm,         ///< hyperbolic Brownian motion with drift, exponential height update
  BrownBessel  ///< Brownian coordinates with a Bessel(-mu) last coordinate
};

struct PathSample {
  double t;       ///< process time
  double clock;   ///< A-functional for Hbm paths, equal to t for BrownBessel paths
  HyperPoint x;
};

/// Free path on [0, t_max] sampled every dt.
std::vector<PathSample> sample_hbm_path(double mu, const HyperPoint& x0, const SimConfig& cfg,
                                        Rng& rng);

/// Free path on [0, t_max], ending early when the Bessel coordinate reaches 0.
std::vector<PathSample> sample_y_path(double mu, const HyperPoint& x0, const SimConfig& cfg,
                                      Rng& rng);

struct ExitRecord {
  bool exited = false;
  double tau = 0.0;
  HyperPoint position{0.0, 1.0};
  /// Exit face. When exited is false and face is Bottom the path was stopped at
  /// the ideal boundary x_n -> 0 (strip domains), otherwise it ran out of horizon.
  std::optional<BoundaryFace> face;
};

struct Ball {
  HyperPoint center;
  double radius;
};

struct ExitOptions {
  double lambda = 0.0;
  std::vector<Ball> balls;
  /// Occupation is weighted by (last coordinate)^weight_power.
  double weight_power = 0.0;
};

struct PathOutcome {
  ExitRecord exit;
  /// int_0^{tau ^ t_max} e^{-lambda t} w(X_t) 1{X_t in ball_j} dt, one entry per ball.
  std::vector<double> occupation;
};

/// Runs one path from x0 until it leaves dom (or the horizon ends).
PathOutcome first_exit(PathKind kind, const DomainSpec& dom, double mu, const HyperPoint& x0,
                       const SimConfig& cfg, Rng& rng, const ExitOptions& opt = {});

/// Runs cfg.n_paths independent paths; outcome i always comes from stream i, so the
/// result does not depend on the number of worker threads.
std::vector<PathOutcome> simulate_exits(PathKind kind, const DomainSpec& dom, double mu,
                                        const HyperPoint& x0, const SimConfig& cfg,
                                        const ExitOptions& opt = {});

/// Heights below strip_floor_ratio * b stop strip paths at the ideal boundary.
inline constexpr double kStripFloorRatio = 1e-9;

}  // namespace hypk::sim

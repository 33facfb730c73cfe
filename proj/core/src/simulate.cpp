#include "hypk/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypk/error.hpp"
#include "hypk/parallel.hpp"

namespace hypk::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void check_start(double mu, const HyperPoint& x0) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  (void)x0;
}

// Substep refinement for the Bessel coordinate close to the origin.
double bessel_step_size(double r, double dt) {
  return r < 10.0 * std::sqrt(dt) ? dt / 100.0 : dt;
}

double bessel_drift(double mu, double r) { return (1.0 - 2.0 * mu) / (2.0 * r); }

struct Crossing {
  bool hit = false;
  double fraction = 1.0;
};

// Distances are to the face, positive inside. var is the variance of the
// driving Brownian increment over the step in the coordinate where the face is flat.
Crossing check_face(double d_old, double d_new, double var, Rng& rng,
                    std::uniform_real_distribution<double>& unif) {
  if (d_new <= 0.0) return {true, d_old / (d_old - d_new)};
  const double expo = -2.0 * d_old * d_new / var;
  if (expo > -40.0 && unif(rng) < std::exp(expo)) return {true, d_old / (d_old + d_new)};
  return {};
}

}  // namespace

void SimConfig::validate() const {
  require(std::isfinite(dt) && dt > 0.0 && dt <= 1e-2, "dt must lie in (0, 1e-2]");
  require(std::isfinite(t_max) && t_max > 0.0, "t_max must be positive");
  require(t_max / dt <= 1e7, "t_max / dt must not exceed 1e7");
  require(n_paths > 0, "n_paths must be positive");
  require(std::isfinite(eps_ball) && eps_ball > 0.0, "eps_ball must be positive");
}

Rng make_path_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
  const std::uint64_t a = splitmix64(state);
  const std::uint64_t b = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Rng(seq);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) {
  std::uint64_t state = seed + 0x632BE59BD9B4E019ULL * (label + 1);
  return splitmix64(state);
}

std::vector<PathSample> sample_hbm_path(double mu, const HyperPoint& x0, const SimConfig& cfg,
                                        Rng& rng) {
  check_start(mu, x0);
  cfg.validate();
  std::normal_distribution<double> gauss;
  const std::size_t n = x0.dim();
  std::vector<double> x(x0.coords().begin(), x0.coords().end());
  double logh = std::log(x0.height());
  double clock = 0.0;
  const auto steps = static_cast<std::int64_t>(std::ceil(cfg.t_max / cfg.dt - 1e-9));
  std::vector<PathSample> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);
  path.push_back({0.0, 0.0, x0});
  const double sdt = std::sqrt(cfg.dt);
  for (std::int64_t s = 1; s <= steps; ++s) {
    const double h_old = x[n - 1];
    logh += sdt * gauss(rng) - mu * cfg.dt;
    const double h_new = std::exp(logh);
    const double d_a = 0.5 * cfg.dt * (h_old * h_old + h_new * h_new);
    const double sa = std::sqrt(d_a);
    for (std::size_t k = 0; k + 1 < n; ++k) x[k] += sa * gauss(rng);
    x[n - 1] = h_new;
    clock += d_a;
    path.push_back({static_cast<double>(s) * cfg.dt, clock, HyperPoint(x)});
  }
  return path;
}

std::vector<PathSample> sample_y_path(double mu, const HyperPoint& x0, const SimConfig& cfg,
                                      Rng& rng) {
  check_start(mu, x0);
  cfg.validate();
  std::normal_distribution<double> gauss;
  const std::size_t n = x0.dim();
  std::vector<double> x(x0.coords().begin(), x0.coords().end());
  const auto steps = static_cast<std::int64_t>(std::ceil(cfg.t_max / cfg.dt - 1e-9));
  std::vector<PathSample> path;
  path.push_back({0.0, 0.0, x0});
  const double sdt = std::sqrt(cfg.dt);
  for (std::int64_t s = 1; s <= steps; ++s) {
    for (std::size_t k = 0; k + 1 < n; ++k) x[k] += sdt * gauss(rng);
    double r = x[n - 1];
    // One full step, subdivided while the radius is small.
    double done = 0.0;
    while (done < cfg.dt * (1.0 - 1e-12) && r > 0.0) {
      const double h = std::min(bessel_step_size(r, cfg.dt), cfg.dt - done);
      r += std::sqrt(h) * gauss(rng) + bessel_drift(mu, r) * h;
      done += h;
    }
    if (r <= 0.0) break;  // absorbed at the origin
    x[n - 1] = r;
    const double t = static_cast<double>(s) * cfg.dt;
    path.push_back({t, t, HyperPoint(x)});
  }
  return path;
}

PathOutcome first_exit(PathKind kind, const DomainSpec& dom, double mu, const HyperPoint& x0,
                       const SimConfig& cfg, Rng& rng, const ExitOptions& opt) {
  check_start(mu, x0);
  cfg.validate();
  dom.validate();
  require(classify(x0, dom).interior(), "starting point must be interior to the domain");
  require(std::isfinite(opt.lambda) && opt.lambda >= 0.0, "lambda must be nonnegative");
  const std::size_t n = x0.dim();
  for (const auto& ball : opt.balls) {
    require(ball.center.dim() == n, "ball centre dimension mismatch");
    require(ball.radius > 0.0, "ball radius must be positive");
  }

  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const bool sides = dom.bounded_width();
  const bool bottom = dom.kind != DomainKind::Strip;
  const bool hbm = kind == PathKind::Hbm;
  const double b = dom.b;
  const double a = dom.a;
  const double log_a = bottom ? std::log(a) : 0.0;
  const double floor_h = kStripFloorRatio * (sides ? b : 1.0);

  std::vector<double> x(x0.coords().begin(), x0.coords().end());
  std::vector<double> xn(n);
  double logh = std::log(x0.height());
  double t = 0.0;

  PathOutcome out;
  out.occupation.assign(opt.balls.size(), 0.0);
  const bool weighted = opt.weight_power != 0.0;
  auto weight = [&](double h) { return weighted ? std::pow(h, opt.weight_power) : 1.0; };
  auto inside = [&](const std::vector<double>& p, const Ball& ball) {
    const auto c = ball.center.coords();
    if (std::abs(p[n - 1] - c[n - 1]) >= ball.radius) return false;
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = p[k] - c[k];
      s += d * d;
    }
    return s < ball.radius * ball.radius;
  };
  auto accumulate = [&](double h_step, double frac, bool include_new) {
    if (opt.balls.empty()) return;
    const double tm = t + 0.5 * frac * h_step;
    const double disc = opt.lambda > 0.0 ? std::exp(-opt.lambda * tm) : 1.0;
    for (std::size_t j = 0; j < opt.balls.size(); ++j) {
      double v = 0.0;
      if (inside(x, opt.balls[j])) v += weight(x[n - 1]);
      if (include_new && inside(xn, opt.balls[j])) v += weight(xn[n - 1]);
      out.occupation[j] += 0.5 * v * frac * h_step * disc;
    }
  };
  auto finish = [&](bool exited, double tau, std::optional<BoundaryFace> face) {
    out.exit.exited = exited;
    out.exit.tau = tau;
    out.exit.face = face;
    out.exit.position = HyperPoint(x);
  };

  while (t < cfg.t_max) {
    double h_step;
    double side_var;
    double bottom_var;
    double bd_old = 0.0, bd_new = 0.0;  // distances used for the bottom face
    bool ideal = false;
    if (hbm) {
      h_step = std::min(cfg.dt, cfg.t_max - t);
      const double h_old = x[n - 1];
      const double logh_new = logh + std::sqrt(h_step) * gauss(rng) - mu * h_step;
      const double h_new = std::exp(logh_new);
      const double d_a = 0.5 * h_step * (h_old * h_old + h_new * h_new);
      const double sa = std::sqrt(d_a);
      for (std::size_t k = 0; k + 1 < n; ++k) xn[k] = x[k] + sa * gauss(rng);
      xn[n - 1] = h_new;
      side_var = d_a;
      bottom_var = h_step;
      if (bottom) {
        bd_old = logh - log_a;
        bd_new = logh_new - log_a;
      } else {
        ideal = h_new < floor_h;
      }
      logh = logh_new;
    } else {
      const double r = x[n - 1];
      h_step = std::min(bessel_step_size(r, cfg.dt), cfg.t_max - t);
      const double s = std::sqrt(h_step);
      for (std::size_t k = 0; k + 1 < n; ++k) xn[k] = x[k] + s * gauss(rng);
      const double r_new = r + s * gauss(rng) + bessel_drift(mu, r) * h_step;
      xn[n - 1] = r_new;
      side_var = h_step;
      bottom_var = h_step;
      if (bottom) {
        bd_old = r - a;
        bd_new = r_new - a;
      } else {
        ideal = check_face(r, r_new, h_step, rng, unif).hit;
      }
    }

    Crossing best;
    std::optional<BoundaryFace> face;
    if (sides) {
      const auto lo = check_face(x[0], xn[0], side_var, rng, unif);
      if (lo.hit) {
        best = lo;
        face = BoundaryFace::SideLow;
      }
      const auto hi = check_face(b - x[0], b - xn[0], side_var, rng, unif);
      if (hi.hit && (!best.hit || hi.fraction < best.fraction)) {
        best = hi;
        face = BoundaryFace::SideHigh;
      }
    }
    if (bottom) {
      const auto bt = check_face(bd_old, bd_new, bottom_var, rng, unif);
      if (bt.hit && (!best.hit || bt.fraction < best.fraction)) {
        best = bt;
        face = BoundaryFace::Bottom;
      }
    }

    if (best.hit) {
      const double f = std::clamp(best.fraction, 0.0, 1.0);
      accumulate(h_step, f, false);
      for (std::size_t k = 0; k < n; ++k) xn[k] = x[k] + f * (xn[k] - x[k]);
      if (*face == BoundaryFace::SideLow) xn[0] = 0.0;
      if (*face == BoundaryFace::SideHigh) xn[0] = b;
      if (*face == BoundaryFace::Bottom) xn[n - 1] = a;
      xn[n - 1] = std::max(xn[n - 1], std::numeric_limits<double>::min());
      x.swap(xn);
      finish(true, t + f * h_step, face);
      return out;
    }
    if (ideal) {
      // The height has collapsed towards x_n = 0 with the first coordinates frozen.
      accumulate(h_step, 1.0, false);
      xn[n - 1] = std::max(xn[n - 1], std::numeric_limits<double>::min());
      x.swap(xn);
      finish(false, t + h_step, BoundaryFace::Bottom);
      return out;
    }
    accumulate(h_step, 1.0, true);
    x.swap(xn);
    t += h_step;
  }
  finish(false, t, std::nullopt);
  return out;
}

std::vector<PathOutcome> simulate_exits(PathKind kind, const DomainSpec& dom, double mu,
                                        const HyperPoint& x0, const SimConfig& cfg,
                                        const ExitOptions& opt) {
  cfg.validate();
  const auto total = static_cast<std::size_t>(cfg.n_paths);
  std::vector<PathOutcome> out(total);
  {
    // Validate arguments once on the calling thread so errors propagate normally.
    auto rng = make_path_rng(cfg.seed, 0);
    out[0] = first_exit(kind, dom, mu, x0, cfg, rng, opt);
  }
  parallel_for(total - 1, [&](std::size_t k) {
    const std::size_t i = k + 1;
    auto rng = make_path_rng(cfg.seed, i);
    out[i] = first_exit(kind, dom, mu, x0, cfg, rng, opt);
  }, 64);
  return out;
}

}  // namespace hypk::sim

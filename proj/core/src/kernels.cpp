#include "hypk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hypk/bessel.hpp"
#include "hypk/error.hpp"
#include "hypk/laplace.hpp"
#include "hypk/quadrature.hpp"

namespace hypk::kernels {

namespace {

using std::numbers::pi;

constexpr double kMinTime = 1e-6;
// The interval factor decays like exp(-pi^2 t / 2); beyond this it is below 1e-120.
constexpr double kMaxTime = 60.0;

struct Moments {
  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t n = 0;
  void add(double v) {
    ++n;
    const double d = v - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (v - mean);
  }
  double std_error() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
};

void check_time(double t) {
  require(std::isfinite(t) && t > kMinTime,
          "t must exceed 1e-6 for the interval Brownian densities");
}

void check_unit(double v, const char* name) {
  require(std::isfinite(v) && v > 0.0 && v < 1.0, std::string(name) + " must lie in (0, 1)");
}

double gauss(double d, double t) {
  return std::exp(-d * d / (2.0 * t)) / std::sqrt(2.0 * pi * t);
}

// Heat kernel in the coordinates strictly between the first and the last.
double middle_gaussian(const HyperPoint& x, const HyperPoint& y, double t) {
  const std::size_t n = x.dim();
  double s = 0.0;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double d = x[k] - y[k];
    s += d * d;
  }
  const double m = static_cast<double>(n) - 2.0;
  return std::exp(-s / (2.0 * t) - 0.5 * m * std::log(2.0 * pi * t));
}

double strip_bottom_hitting(double mu, double x, double t) {
  // Hitting time of 0 by BES(-mu) from x is x^2 / (2 Gamma(mu)), an inverse gamma law.
  const double c = 0.5 * x * x;
  return std::exp(mu * std::log(c) - (mu + 1.0) * std::log(t) - c / t - std::lgamma(mu));
}

double hitting_survival_fast(double nu, double a, double x, double t) {
  const double v = laplace::talbot(
      [&](std::complex<double> s) {
        return (1.0 - bessel::hitting_time_transform(nu, a, x, s)) / s;
      },
      t);
  return std::clamp(v, 0.0, 1.0);
}

// Adaptive quadrature in u = log t over [t_lo, t_hi].
double log_time_integral(const std::function<double(double)>& f, double t_lo, double t_hi,
                         std::vector<double> scales, const char* what) {
  std::vector<double> br{std::log(t_lo), std::log(t_hi)};
  for (double s : scales)
    if (s > t_lo && s < t_hi) br.push_back(std::log(s));
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end(), [](double p, double q) { return q - p < 1e-9; }),
           br.end());
  quad::Options opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-7;
  opt.max_panels = 2000;
  const auto res = quad::integrate(
      [&](double u) {
        const double t = std::exp(u);
        return f(t) * t;
      },
      br, opt);
  if (!res.converged && res.error > 1e-5 * std::abs(res.value) + 1e-12)
    throw NumericalError(std::string(what) + ": time quadrature did not converge");
  return res.value;
}

// prefactor times the killed density, or zero when even the free density would leave
// a contribution below `floor` (the tail of the time integral, where the killed density
// itself is far below the resolution of its Laplace inversion).
double killed_term(double mu, double a, double t, double xn, double yn, double prefactor,
                   double floor) {
  const double free = bessel::transition_density(-mu, t, xn, yn);
  if (prefactor * free * t <= floor) return 0.0;
  return prefactor * std::max(bessel::killed_density_numeric(-mu, a, t, xn, yn), 0.0);
}

// Relative size below which a point of a time integrand is dropped.
constexpr double kNegligible = 1e-13;

void check_slab_point(const HyperPoint& x, double a, const char* name) {
  require(x[0] > 0.0 && x[0] < 1.0, std::string(name) + " must satisfy 0 < x_1 < 1");
  require(x.height() > a, std::string(name) + " must lie above the bottom face");
}

std::vector<double> time_scales(const HyperPoint& x, const HyperPoint& y) {
  const double d2 = euclidean_distance_squared(x, y);
  return {d2 / 8.0, d2, 8.0 * d2, 0.01, 0.1, 1.0};
}


}  // namespace

double ball_volume(std::size_t n, double r) {
  const double nd = static_cast<double>(n);
  return std::exp(0.5 * nd * std::log(pi) - std::lgamma(0.5 * nd + 1.0)) * std::pow(r, nd);
}

// ------------------------------------------------------------------ Monte Carlo

std::vector<KernelEstimate> green_from_outcomes(std::span<const sim::PathOutcome> outcomes,
                                                std::span<const sim::Ball> balls, double mu,
                                                double lambda) {
  std::vector<KernelEstimate> out;
  for (std::size_t j = 0; j < balls.size(); ++j) {
    Moments m;
    for (const auto& o : outcomes) m.add(o.occupation.at(j));
    const double vol = ball_volume(balls[j].center.dim(), balls[j].radius);
    KernelEstimate e;
    e.value = m.mean / vol;
    e.std_error = m.std_error() / vol;
    e.n_paths = m.n;
    e.lambda = lambda;
    e.mu = mu;
    out.push_back(e);
  }
  return out;
}

std::vector<KernelEstimate> estimate_green_many(const DomainSpec& dom, double mu, double lambda,
                                                const HyperPoint& x,
                                                std::span<const sim::Ball> balls,
                                                const sim::SimConfig& cfg,
                                                const GreenOptions& opt) {
  dom.validate();
  cfg.validate();
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be nonnegative");
  require(opt.kind == sim::PathKind::Hbm || lambda == 0.0,
          "Brownian-Bessel paths run on a different clock; they require lambda = 0");
  require(!balls.empty(), "at least one ball centre is required");
  require(classify(x, dom).interior(), "x must be interior to the domain");
  for (const auto& ball : balls) {
    const auto& y = ball.center;
    require(y.dim() == x.dim(), "x and y must have the same dimension");
    require(classify(y, dom).interior(), "y must be interior to the domain");
    require(!(x == y), "x and y must differ");
    const double r = ball.radius;
    bool fits = y.height() - r > (dom.kind == DomainKind::Strip ? 0.0 : dom.a);
    if (dom.bounded_width()) fits = fits && y[0] - r > 0.0 && y[0] + r < dom.b;
    require(fits, "ball B(y, eps) must be contained in the domain");
  }

  std::vector<sim::Ball> all(balls.begin(), balls.end());
  if (opt.half_ball)
    for (const auto& ball : balls) all.push_back({ball.center, 0.5 * ball.radius});
  sim::ExitOptions eo;
  eo.lambda = lambda;
  eo.balls = all;
  eo.weight_power = opt.weight_power + (opt.kind == sim::PathKind::BrownBessel ? -2.0 : 0.0);
  const auto outcomes = sim::simulate_exits(opt.kind, dom, mu, x, cfg, eo);
  auto est = green_from_outcomes(outcomes, all, mu, lambda);

  std::vector<KernelEstimate> out(est.begin(), est.begin() + static_cast<long>(balls.size()));
  for (std::size_t j = 0; j < balls.size(); ++j) {
    auto& e = out[j];
    e.near_diagonal = euclidean_distance(x, balls[j].center) < 5.0 * balls[j].radius;
    if (opt.half_ball) {
      const auto& h = est[balls.size() + j];
      e.half_ball_value = h.value;
      e.half_ball_std_error = h.std_error;
      const double se = std::hypot(e.std_error, h.std_error);
      e.ball_bias = std::abs(e.value - h.value) > 2.0 * se;
    }
  }
  return out;
}

KernelEstimate estimate_green(const DomainSpec& dom, double mu, double lambda, const HyperPoint& x,
                              const HyperPoint& y, const sim::SimConfig& cfg,
                              const GreenOptions& opt) {
  const sim::Ball ball{y, cfg.eps_ball};
  return estimate_green_many(dom, mu, lambda, x, std::span<const sim::Ball>(&ball, 1), cfg, opt)
      .front();
}

double FaceRegion::volume() const {
  double v = 1.0;
  for (std::size_t k = 0; k < lower.size(); ++k) v *= upper[k] - lower[k];
  return v;
}

bool FaceRegion::contains(const HyperPoint& y) const {
  const std::size_t n = y.dim();
  if (lower.size() + 1 != n) return false;
  const std::size_t offset = face == BoundaryFace::Bottom ? 0 : 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double v = y[k + offset];
    if (v < lower[k] || v > upper[k]) return false;
  }
  return true;
}

KernelEstimate poisson_from_outcomes(std::span<const sim::PathOutcome> outcomes,
                                     const FaceRegion& region, double mu, double lambda,
                                     double weight_power) {
  Moments m;
  for (const auto& o : outcomes) {
    const auto& ex = o.exit;
    double v = 0.0;
    if (ex.face && *ex.face == region.face && region.contains(ex.position)) {
      const bool ideal = !ex.exited;
      double w = ideal ? (lambda > 0.0 ? 0.0 : 1.0) : std::exp(-lambda * ex.tau);
      if (weight_power != 0.0 && w != 0.0) w *= std::pow(ex.position.height(), weight_power);
      v = w;
    }
    m.add(v);
  }
  const double vol = region.volume();
  KernelEstimate e;
  e.value = m.mean / vol;
  e.std_error = m.std_error() / vol;
  e.n_paths = m.n;
  e.lambda = lambda;
  e.mu = mu;
  return e;
}

std::vector<KernelEstimate> estimate_poisson_many(const DomainSpec& dom, double mu, double lambda,
                                                  const HyperPoint& x,
                                                  std::span<const FaceRegion> regions,
                                                  const sim::SimConfig& cfg,
                                                  const PoissonOptions& opt) {
  dom.validate();
  cfg.validate();
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be nonnegative");
  require(opt.kind == sim::PathKind::Hbm || lambda == 0.0,
          "Brownian-Bessel paths run on a different clock; they require lambda = 0");
  require(!regions.empty(), "at least one region is required");
  const std::size_t n = x.dim();
  for (const auto& r : regions) {
    require(dom.has_face(r.face), "region face " + to_string(r.face) + " is not a face of " +
                                      to_string(dom));
    require(r.lower.size() + 1 == n && r.upper.size() + 1 == n,
            "region must have n-1 coordinate ranges");
    for (std::size_t k = 0; k + 1 < n; ++k)
      require(r.lower[k] < r.upper[k], "region ranges must have positive length");
    if (r.face == BoundaryFace::Bottom && dom.bounded_width())
      require(r.lower[0] >= 0.0 && r.upper[0] <= dom.b, "bottom region must lie within 0 <= x_1 <= b");
    if (r.face != BoundaryFace::Bottom && dom.kind == DomainKind::Slab)
      require(r.lower[n - 2] >= dom.a, "side region must lie above the bottom face");
  }

  double run_mu = mu;
  double run_lambda = lambda;
  double factor = 1.0;
  bool surrogate = false;
  if (dom.kind == DomainKind::HalfSpace && lambda > 0.0) {
    const double eta = std::sqrt(mu * mu + 2.0 * lambda);
    run_mu = eta;
    run_lambda = 0.0;
    factor = std::pow(x.height(), mu - eta);
    surrogate = true;
  }
  const auto outcomes = sim::simulate_exits(opt.kind, dom, run_mu, x, cfg, {});
  std::vector<KernelEstimate> out;
  for (const auto& r : regions) {
    auto e = poisson_from_outcomes(outcomes, r, run_mu, run_lambda, opt.weight_power);
    e.value *= factor;
    e.std_error *= factor;
    e.mu = mu;
    e.lambda = lambda;
    e.surrogate = surrogate;
    out.push_back(e);
  }
  return out;
}

KernelEstimate estimate_poisson(const DomainSpec& dom, double mu, double lambda,
                                const HyperPoint& x, const FaceRegion& region,
                                const sim::SimConfig& cfg, const PoissonOptions& opt) {
  return estimate_poisson_many(dom, mu, lambda, x, std::span<const FaceRegion>(&region, 1), cfg,
                               opt)
      .front();
}

ExitFractions exit_fractions(std::span<const sim::PathOutcome> outcomes) {
  ExitFractions f;
  std::array<Moments, 3> m;
  Moments none;
  for (const auto& o : outcomes) {
    const auto& ex = o.exit;
    const int idx = ex.exited && ex.face ? static_cast<int>(*ex.face) : -1;
    for (int k = 0; k < 3; ++k) m[k].add(idx == k ? 1.0 : 0.0);
    none.add(idx < 0 ? 1.0 : 0.0);
  }
  for (int k = 0; k < 3; ++k) {
    f.face[k] = m[k].mean;
    f.std_error[k] = m[k].std_error();
  }
  f.not_exited = none.mean;
  return f;
}

// ------------------------------------------------------------ interval densities

double j_density(double t, double x1, double y1, int terms) {
  check_time(t);
  check_unit(x1, "x1");
  check_unit(y1, "y1");
  require(terms >= 0, "terms must be nonnegative");
  if (terms == 0 && t <= kImagesCrossover) {
    double s = 0.0;
    for (int k = -4; k <= 4; ++k)
      s += gauss(x1 - y1 + 2.0 * k, t) - gauss(x1 + y1 + 2.0 * k, t);
    return std::max(s, 0.0);
  }
  const double c = pi * pi * t / 2.0;
  double s = 0.0;
  for (int k = 1;; ++k) {
    const double kd = k;
    s += std::sin(kd * pi * x1) * std::sin(kd * pi * y1) * std::exp(-kd * kd * c);
    if (terms > 0) {
      if (k >= terms) break;
    } else {
      const double tail = 2.0 * std::exp(-(kd + 1) * (kd + 1) * c) /
                          (1.0 - std::exp(-(2.0 * kd + 3.0) * c));
      if (tail < 1e-14 || k > 100000) break;
    }
  }
  return std::max(2.0 * s, 0.0);
}

double gamma_exit_density(double t, double x1, int endpoint, int terms) {
  check_time(t);
  check_unit(x1, "x1");
  require(endpoint == 0 || endpoint == 1, "endpoint must be 0 or 1");
  require(terms >= 0, "terms must be nonnegative");
  const double x = endpoint == 0 ? x1 : 1.0 - x1;
  if (terms == 0 && t <= kImagesCrossover) {
    double s = 0.0;
    for (int k = -4; k <= 4; ++k) {
      const double d = x + 2.0 * k;
      s += d * std::exp(-d * d / (2.0 * t));
    }
    return std::max(s / std::sqrt(2.0 * pi * t * t * t), 0.0);
  }
  const double c = pi * pi * t / 2.0;
  double s = 0.0;
  for (int k = 1;; ++k) {
    const double kd = k;
    s += kd * std::sin(kd * pi * x) * std::exp(-kd * kd * c);
    if (terms > 0) {
      if (k >= terms) break;
    } else {
      const double k1 = kd + 1.0;
      const double tail = k1 * std::exp(-k1 * k1 * c) / (1.0 - std::exp(-(2.0 * k1 + 1.0) * c)) *
                          (1.0 + 1.0 / (k1 * c));
      if (pi * tail < 1e-14 || k > 100000) break;
    }
  }
  return std::max(pi * s, 0.0);
}

double interval_survival(double t, double x1) {
  check_unit(x1, "x1");
  require(std::isfinite(t) && t > 0.0, "t must be positive");
  if (t <= kImagesCrossover) {
    const double st = std::sqrt(t);
    auto phi = [&](double v) { return 0.5 * std::erfc(-v / (st * std::numbers::sqrt2)); };
    double s = 0.0;
    for (int k = -4; k <= 4; ++k) {
      const double kk = 2.0 * k;
      s += phi(1.0 - x1 + kk) - phi(-x1 + kk) - phi(1.0 + x1 + kk) + phi(x1 + kk);
    }
    return std::clamp(s, 0.0, 1.0);
  }
  const double c = pi * pi * t / 2.0;
  double s = 0.0;
  for (int k = 1; k < 100000; k += 2) {
    const double kd = k;
    const double term = 4.0 / (kd * pi) * std::exp(-kd * kd * c);
    s += term * std::sin(kd * pi * x1);
    if (term < 1e-17) break;
  }
  return std::clamp(s, 0.0, 1.0);
}

// ------------------------------------------------------------- slab integrals

double slab_green_quadrature(double mu, double a, const HyperPoint& x, const HyperPoint& y) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(std::isfinite(a) && a > 0.0, "a must be positive");
  require(x.dim() == y.dim(), "dimension mismatch");
  check_slab_point(x, a, "x");
  check_slab_point(y, a, "y");
  require(!(x == y), "x and y must differ");
  const double yn = y.height();
  auto prefactor = [&](double t) {
    if (t <= kMinTime) return 0.0;
    const double jj = j_density(t, x[0], y[0]);
    return jj == 0.0 ? 0.0 : jj * middle_gaussian(x, y, t);
  };
  // Without killing the same integral bounds the result from above.
  const double upper = log_time_integral(
      [&](double t) { return prefactor(t) * bessel::transition_density(-mu, t, x.height(), yn); },
      kMinTime * 1.0001, kMaxTime, time_scales(x, y), "slab Green quadrature (free)");
  auto f = [&](double t) {
    const double pf = prefactor(t);
    return pf == 0.0 ? 0.0 : killed_term(mu, a, t, x.height(), yn, pf, kNegligible * upper);
  };
  return log_time_integral(f, kMinTime * 1.0001, kMaxTime, time_scales(x, y),
                           "slab Green quadrature") /
         (yn * yn);
}

double strip_green_quadrature(double mu, const HyperPoint& x, const HyperPoint& y) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(x.dim() == y.dim(), "dimension mismatch");
  check_slab_point(x, 0.0, "x");
  check_slab_point(y, 0.0, "y");
  require(!(x == y), "x and y must differ");
  const double yn = y.height();
  auto f = [&](double t) {
    if (t <= kMinTime) return 0.0;
    const double jj = j_density(t, x[0], y[0]);
    if (jj == 0.0) return 0.0;
    return jj * middle_gaussian(x, y, t) * bessel::transition_density(-mu, t, x.height(), yn);
  };
  return log_time_integral(f, kMinTime * 1.0001, kMaxTime, time_scales(x, y),
                           "strip Green quadrature") /
         (yn * yn);
}

double halfspace_green_quadrature(double mu, double a, const HyperPoint& x, const HyperPoint& y) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(std::isfinite(a) && a > 0.0, "a must be positive");
  require(x.dim() == y.dim(), "dimension mismatch");
  require(x.height() > a && y.height() > a, "points must lie above the bottom face");
  require(!(x == y), "x and y must differ");
  const std::size_t n = x.dim();
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) s += (x[k] - y[k]) * (x[k] - y[k]);
  const double yn = y.height();
  const double m = static_cast<double>(n) - 1.0;
  auto gauss = [&](double t) { return std::exp(-s / (2.0 * t) - 0.5 * m * std::log(2.0 * pi * t)); };
  auto scales = time_scales(x, y);
  scales.push_back(x.height() * yn);
  scales.push_back(100.0 * x.height() * yn);
  const double t_hi = 1e6 * (1.0 + x.height() * yn);
  const double upper = log_time_integral(
      [&](double t) { return gauss(t) * bessel::transition_density(-mu, t, x.height(), yn); }, 1e-8,
      t_hi, scales, "half-space Green quadrature (free)");
  auto f = [&](double t) {
    const double g = gauss(t);
    return g == 0.0 ? 0.0 : killed_term(mu, a, t, x.height(), yn, g, kNegligible * upper);
  };
  return log_time_integral(f, 1e-8, t_hi, scales, "half-space Green quadrature") / (yn * yn);
}

double slab_poisson_quadrature(double mu, double a, const HyperPoint& x, const HyperPoint& y) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(std::isfinite(a) && a >= 0.0, "a must be nonnegative");
  require(x.dim() == y.dim(), "dimension mismatch");
  check_slab_point(x, a, "x");
  const bool strip = a == 0.0;
  const double tol = 1e-12;
  const bool on_side = std::abs(y[0]) <= tol || std::abs(y[0] - 1.0) <= tol;
  const bool on_bottom = !strip && std::abs(y.height() - a) <= tol * a;
  require(on_side || on_bottom, "y must lie on a face of the slab");
  require(!(on_side && on_bottom), "y must not be a corner of the slab");
  const double xn = x.height();
  if (on_side) {
    require(y.height() > a, "side-face point must lie above the bottom");
    const int endpoint = y[0] > 0.5 ? 1 : 0;
    auto prefactor = [&](double t) {
      if (t <= kMinTime) return 0.0;
      const double gm = gamma_exit_density(t, x[0], endpoint);
      return gm == 0.0 ? 0.0 : gm * middle_gaussian(x, y, t);
    };
    auto free = [&](double t) {
      return prefactor(t) * bessel::transition_density(-mu, t, xn, y.height());
    };
    const double upper = log_time_integral(free, kMinTime * 1.0001, kMaxTime, time_scales(x, y),
                                           "slab Poisson quadrature (side, free)");
    if (strip) return upper;
    auto f = [&](double t) {
      const double pf = prefactor(t);
      return pf == 0.0 ? 0.0 : killed_term(mu, a, t, xn, y.height(), pf, kNegligible * upper);
    };
    return log_time_integral(f, kMinTime * 1.0001, kMaxTime, time_scales(x, y),
                             "slab Poisson quadrature (side)");
  }
  require(y[0] > 0.0 && y[0] < 1.0, "bottom-face point must satisfy 0 < y_1 < 1");
  auto f = [&](double t) {
    if (t <= kMinTime) return 0.0;
    const double jj = j_density(t, x[0], y[0]);
    if (jj == 0.0) return 0.0;
    const double g = middle_gaussian(x, y, t);
    if (g == 0.0) return 0.0;
    const double q = strip ? strip_bottom_hitting(mu, xn, t) : bessel::hitting_density(-mu, a, xn, t);
    return jj * g * q;
  };
  return log_time_integral(f, kMinTime * 1.0001, kMaxTime, time_scales(x, y),
                           "slab Poisson quadrature (bottom)");
}

double green_quadrature(const DomainSpec& dom, double mu, const HyperPoint& x,
                        const HyperPoint& y) {
  dom.validate();
  const double nd = static_cast<double>(x.dim());
  switch (dom.kind) {
    case DomainKind::Slab:
      return std::pow(dom.b, -nd) *
             slab_green_quadrature(mu, dom.a / dom.b, scale_point(x, 1.0 / dom.b),
                                   scale_point(y, 1.0 / dom.b));
    case DomainKind::Strip:
      return std::pow(dom.b, -nd) *
             strip_green_quadrature(mu, scale_point(x, 1.0 / dom.b), scale_point(y, 1.0 / dom.b));
    case DomainKind::HalfSpace:
      return halfspace_green_quadrature(mu, dom.a, x, y);
  }
  return 0.0;
}

double poisson_quadrature(const DomainSpec& dom, double mu, const HyperPoint& x,
                          const HyperPoint& y) {
  dom.validate();
  require(dom.kind != DomainKind::HalfSpace,
          "Poisson quadrature is implemented for slab and strip domains");
  const double nd = static_cast<double>(x.dim());
  std::vector<double> yc(y.coords().begin(), y.coords().end());
  for (auto& v : yc) v /= dom.b;
  if (dom.kind == DomainKind::Strip) {
    // The bottom of the strip is the ideal boundary x_n = 0.
    require(yc.back() > 0.0, "strip bottom points are not representable; use a side face");
  }
  return std::pow(dom.b, 1.0 - nd) *
         slab_poisson_quadrature(mu, dom.kind == DomainKind::Strip ? 0.0 : dom.a / dom.b,
                                 scale_point(x, 1.0 / dom.b), HyperPoint(yc));
}

std::array<double, 3> slab_face_masses(double mu, double a, const HyperPoint& x) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(std::isfinite(a) && a > 0.0, "a must be positive");
  check_slab_point(x, a, "x");
  const double xn = x.height();
  const std::vector<double> scales{0.001, 0.01, 0.1, 1.0, (xn - a) * (xn - a)};
  std::array<double, 3> out{};
  for (int endpoint = 0; endpoint < 2; ++endpoint) {
    auto f = [&](double t) {
      if (t <= kMinTime) return 0.0;
      const double gm = gamma_exit_density(t, x[0], endpoint);
      return gm == 0.0 ? 0.0 : gm * hitting_survival_fast(-mu, a, xn, t);
    };
    out[static_cast<std::size_t>(endpoint)] =
        log_time_integral(f, kMinTime * 1.0001, 60.0, scales, "side face mass");
  }
  auto g = [&](double t) {
    const double s = interval_survival(t, x[0]);
    return s == 0.0 ? 0.0 : s * bessel::hitting_density(-mu, a, xn, t);
  };
  out[2] = log_time_integral(g, 1e-9, 60.0, scales, "bottom face mass");
  return out;
}

}  // namespace hypk::kernels

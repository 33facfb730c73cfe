#include "hypk/theory.hpp"

#include <cmath>
#include <vector>

#include "hypk/error.hpp"

namespace hypk::theory {

namespace {

double combined_z(const kernels::KernelEstimate& p, const kernels::KernelEstimate& q) {
  const double se = std::hypot(p.std_error, q.std_error);
  const double d = p.value - q.value;
  if (se == 0.0) return d == 0.0 ? 0.0 : std::copysign(INFINITY, d);
  return d / se;
}

kernels::KernelEstimate scaled(kernels::KernelEstimate e, double factor) {
  e.value *= factor;
  e.std_error *= factor;
  e.half_ball_value *= factor;
  e.half_ball_std_error *= factor;
  return e;
}

}  // namespace

double eta(double mu, double lambda) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be nonnegative");
  return std::sqrt(mu * mu + 2.0 * lambda);
}

double reduce_green(double mu, double lambda, const HyperPoint& x, const HyperPoint& y,
                    double g_eta) {
  const double e = eta(mu, lambda);
  require(x.dim() == y.dim(), "dimension mismatch");
  return std::pow(x.height() / y.height(), mu - e) * g_eta;
}

double reduce_poisson(const DomainSpec& dom, double mu, double lambda, const HyperPoint& x,
                      const HyperPoint& y, double p_eta) {
  dom.validate();
  const double e = eta(mu, lambda);
  require(x.dim() == y.dim(), "dimension mismatch");
  require(!(dom.kind == DomainKind::HalfSpace && lambda > 0.0),
          "the Poisson reduction needs an almost surely finite exit time; "
          "half-space kernels with lambda > 0 are degenerate");
  return std::pow(x.height() / y.height(), mu - e) * p_eta;
}

double default_step(const HyperPoint& x) { return 1e-3 * x.height(); }

double apply_generator(double mu, const ScalarField& f, const HyperPoint& x, double h) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(std::isfinite(h) && h > 0.0, "step must be positive");
  require(x.height() - h > 0.0, "finite-difference stencil leaves the half-space");
  const std::size_t n = x.dim();
  std::vector<double> c(x.coords().begin(), x.coords().end());
  const double f0 = f(x);
  double lap = 0.0;
  double dn = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double keep = c[k];
    c[k] = keep + h;
    const double fp = f(HyperPoint(c));
    c[k] = keep - h;
    const double fm = f(HyperPoint(c));
    c[k] = keep;
    lap += (fp - 2.0 * f0 + fm) / (h * h);
    if (k + 1 == n) dn = (fp - fm) / (2.0 * h);
  }
  const double xn = x.height();
  return 0.5 * (xn * xn * lap - (2.0 * mu - 1.0) * xn * dn);
}

DirichletResult dirichlet_solve(const DomainSpec& dom, double mu, double lambda,
                                const ScalarField& f, const HyperPoint& x,
                                const sim::SimConfig& cfg) {
  dom.validate();
  require(dom.kind != DomainKind::HalfSpace, "the Dirichlet solver supports slab and strip domains");
  const double e = eta(mu, lambda);
  const auto outcomes = sim::simulate_exits(sim::PathKind::Hbm, dom, e, x, cfg, {});
  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t cnt = 0;
  for (const auto& o : outcomes) {
    const bool terminated = o.exit.exited || o.exit.face.has_value();
    const double v = terminated ? f(o.exit.position) : 0.0;
    ++cnt;
    const double d = v - mean;
    mean += d / static_cast<double>(cnt);
    m2 += d * (v - mean);
  }
  const double se =
      cnt > 1 ? std::sqrt(m2 / static_cast<double>(cnt - 1) / static_cast<double>(cnt)) : 0.0;
  const double factor = std::pow(x.height(), mu - e);
  DirichletResult r;
  r.harmonic_value = mean;
  r.value = factor * mean;
  r.std_error = factor * se;
  r.n_paths = cnt;
  return r;
}

ScalingCheck scaling_verify(const DomainSpec& dom, double mu, double c, const HyperPoint& x,
                            const HyperPoint& y, const kernels::FaceRegion& region,
                            const sim::SimConfig& cfg) {
  require(std::isfinite(c) && c > 0.0, "scale factor must be positive");
  const double nd = static_cast<double>(x.dim());
  const auto dom_c = scale_domain(dom, c);
  auto cfg_c = cfg;
  cfg_c.eps_ball = c * cfg.eps_ball;
  if (c != 1.0) cfg_c.seed = sim::derive_seed(cfg.seed, 0x5CA1E);
  kernels::FaceRegion region_c = region;
  for (auto& v : region_c.lower) v *= c;
  for (auto& v : region_c.upper) v *= c;
  const auto xc = scale_point(x, c);
  const auto yc = scale_point(y, c);

  ScalingCheck out;
  kernels::GreenOptions go;
  go.half_ball = false;
  out.green_base = kernels::estimate_green(dom, mu, 0.0, x, y, cfg, go);
  out.green_scaled =
      scaled(kernels::estimate_green(dom_c, mu, 0.0, xc, yc, cfg_c, go), std::pow(c, nd));
  out.green_z = combined_z(out.green_base, out.green_scaled);
  out.poisson_base = kernels::estimate_poisson(dom, mu, 0.0, x, region, cfg);
  out.poisson_scaled =
      scaled(kernels::estimate_poisson(dom_c, mu, 0.0, xc, region_c, cfg_c), std::pow(c, nd - 1.0));
  out.poisson_z = combined_z(out.poisson_base, out.poisson_scaled);
  return out;
}

}  // namespace hypk::theory

// Hartman-Watson type density theta_r(t), defined through
//   int_0^inf e^{-lambda t} theta_r(t) dt = I_{sqrt(2 lambda)}(r),
// evaluated from the oscillatory representation
//   theta_r(t) = r (2 pi^3 t)^{-1/2} e^{pi^2/(2t)}
//                * int_0^inf e^{-xi^2/(2t)} e^{-r cosh xi} sinh(xi) sin(pi xi / t) dxi.
// The integral cancels down to roughly e^{-pi^2/(2t)} of its integrand scale,
// so small t is evaluated in MPFR with enough extra bits to absorb that loss.
// The integrand is entire and even, so the trapezoid rule on the half line
// converges geometrically; the step is chosen from the strip |Im xi| <= pi/2.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hypk/error.hpp"
#include "hypk/quadrature.hpp"
#include "hypk/specfun.hpp"

namespace hypk::specfun {
namespace {

using std::numbers::pi;

class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;
  ~MpReal() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct TrapezoidPlan {
  double step;
  int nodes;
  double cancellation;  // nats lost to cancellation (estimate)
};

TrapezoidPlan plan(double r, double t) {
  const double lr = std::max(0.0, std::log(2.0 / r));
  const double cancellation = pi * pi / (2.0 * t) + lr * lr / (2.0 * t);
  const double target = cancellation + 60.0;
  const double step = pi * pi / (5.0 * pi * pi / (8.0 * t) + 0.5 * t + target);
  // Truncate where the integrand magnitude bound drops below e^{-target-5}.
  auto log_bound = [&](double xi) { return -xi * xi / (2.0 * t) + xi - r * std::cosh(xi); };
  double xi = 0.0;
  while (xi < 200.0) {
    xi += 0.05;
    if (log_bound(xi) < -(target + 5.0) && log_bound(xi + 0.05) < log_bound(xi)) break;
  }
  const int nodes = static_cast<int>(std::ceil(xi / step)) + 1;
  return {step, nodes, cancellation};
}

double theta_double(double r, double t, const TrapezoidPlan& p) {
  double sum = 0.0;
  for (int k = 1; k <= p.nodes; ++k) {
    const double xi = k * p.step;
    sum += std::exp(-xi * xi / (2.0 * t) - r * std::cosh(xi)) * std::sinh(xi) *
           std::sin(pi * xi / t);
  }
  return r / std::sqrt(2.0 * pi * pi * pi * t) * std::exp(pi * pi / (2.0 * t)) * p.step * sum;
}

double theta_mpfr(double r, double t, const TrapezoidPlan& p) {
  const mpfr_prec_t prec =
      96 + static_cast<mpfr_prec_t>(std::ceil(p.cancellation / std::numbers::ln2));
  MpReal mr(prec), mt(prec), mpi(prec), xi(prec), a(prec), b(prec), sh(prec), ch(prec),
      sum(prec), tmp(prec);
  mpfr_set_d(mr.get(), r, MPFR_RNDN);
  mpfr_set_d(mt.get(), t, MPFR_RNDN);
  mpfr_const_pi(mpi.get(), MPFR_RNDN);
  mpfr_set_zero(sum.get(), 1);
  for (int k = 1; k <= p.nodes; ++k) {
    // xi = k * step (step is a double; the product is formed in full precision)
    mpfr_set_d(xi.get(), p.step, MPFR_RNDN);
    mpfr_mul_si(xi.get(), xi.get(), k, MPFR_RNDN);
    mpfr_sinh_cosh(sh.get(), ch.get(), xi.get(), MPFR_RNDN);
    // a = -xi^2/(2t) - r cosh xi
    mpfr_sqr(a.get(), xi.get(), MPFR_RNDN);
    mpfr_div(a.get(), a.get(), mt.get(), MPFR_RNDN);
    mpfr_div_2ui(a.get(), a.get(), 1, MPFR_RNDN);
    mpfr_mul(tmp.get(), mr.get(), ch.get(), MPFR_RNDN);
    mpfr_add(a.get(), a.get(), tmp.get(), MPFR_RNDN);
    mpfr_neg(a.get(), a.get(), MPFR_RNDN);
    mpfr_exp(a.get(), a.get(), MPFR_RNDN);
    // b = sin(pi xi / t)
    mpfr_mul(b.get(), mpi.get(), xi.get(), MPFR_RNDN);
    mpfr_div(b.get(), b.get(), mt.get(), MPFR_RNDN);
    mpfr_sin(b.get(), b.get(), MPFR_RNDN);
    mpfr_mul(a.get(), a.get(), sh.get(), MPFR_RNDN);
    mpfr_mul(a.get(), a.get(), b.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), a.get(), MPFR_RNDN);
  }
  mpfr_mul_d(sum.get(), sum.get(), p.step, MPFR_RNDN);
  // prefactor r (2 pi^3 t)^{-1/2} e^{pi^2/(2t)}
  mpfr_sqr(tmp.get(), mpi.get(), MPFR_RNDN);
  mpfr_div(tmp.get(), tmp.get(), mt.get(), MPFR_RNDN);
  mpfr_div_2ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
  mpfr_exp(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul(sum.get(), sum.get(), tmp.get(), MPFR_RNDN);
  mpfr_pow_ui(tmp.get(), mpi.get(), 3, MPFR_RNDN);
  mpfr_mul(tmp.get(), tmp.get(), mt.get(), MPFR_RNDN);
  mpfr_mul_2ui(tmp.get(), tmp.get(), 1, MPFR_RNDN);
  mpfr_sqrt(tmp.get(), tmp.get(), MPFR_RNDN);
  mpfr_div(sum.get(), sum.get(), tmp.get(), MPFR_RNDN);
  mpfr_mul(sum.get(), sum.get(), mr.get(), MPFR_RNDN);
  return mpfr_get_d(sum.get(), MPFR_RNDN);
}

}  // namespace

double theta_hw(double r, double t) {
  require(r > 0.0 && std::isfinite(r), "theta_hw: r must be positive");
  require(t >= kThetaMinTime && t <= kThetaMaxTime,
          "theta_hw: t outside the supported window [0.05, 50]");
  const TrapezoidPlan p = plan(r, t);
  const double value = p.cancellation < 8.0 ? theta_double(r, t, p) : theta_mpfr(r, t, p);
  // Values below the discretization floor (~e^{-60} of the integrand scale) are noise.
  return std::max(value, 0.0);
}

LaplaceCheck laplace_check(double r, double lambda) {
  require(r > 0.0 && std::isfinite(r), "laplace_check: r must be positive");
  require(lambda > 0.0 && std::isfinite(lambda), "laplace_check: lambda must be positive");
  const double nu = std::sqrt(2.0 * lambda);
  require(nu < kMaxOrder, "laplace_check: sqrt(2 lambda) exceeds the supported order range");
  const std::vector<double> breaks = {kThetaMinTime, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0,
                                      1.5, 2.0, 3.0, 5.0, 10.0, 20.0, kThetaMaxTime};
  quad::Options opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-10;
  opt.max_panels = 10000;
  const auto res = quad::integrate(
      [&](double t) { return std::exp(-lambda * t) * theta_hw(r, t); }, breaks, opt);
  if (!res.converged)
    throw NumericalError("laplace_check: quadrature did not converge");
  const double bessel = bessel_i(nu, r);
  return {res.value / bessel, res.value, bessel, res.error};
}

}  // namespace hypk::specfun

#include "hypk/bessel.hpp"

#include <algorithm>
#include <vector>
#include <cmath>
#include <string>

#include "hypk/error.hpp"
#include "hypk/laplace.hpp"
#include "hypk/quadrature.hpp"
#include "hypk/specfun.hpp"

namespace hypk::bessel {

namespace {

constexpr double kInversionFloor = 1e-10;

void check_index(double nu) {
  require(std::isfinite(nu) && nu < 0.0, "Bessel index must be negative, got " + std::to_string(nu));
  require(-nu < specfun::kMaxOrder, "Bessel index magnitude must be below 50");
}

void check_positive(double v, const char* name) {
  require(std::isfinite(v) && v > 0.0, std::string(name) + " must be positive and finite");
}

void check_hitting(double nu, double a, double x) {
  check_index(nu);
  check_positive(a, "a");
  require(std::isfinite(x) && x > a, "starting point must satisfy x > a");
}

InversionResult combine(double talbot, double stehfest) {
  InversionResult r;
  r.value = talbot;
  r.cross_check = stehfest;
  r.discrepancy = std::abs(talbot - stehfest) / std::max(std::abs(talbot), kInversionFloor);
  r.trusted = std::isfinite(talbot) && r.discrepancy <= kInversionTolerance;
  return r;
}

}  // namespace

double transition_density(double nu, double t, double x, double y) {
  check_index(nu);
  check_positive(t, "t");
  check_positive(x, "x");
  check_positive(y, "y");
  const double z = x * y / t;
  const double d = x - y;
  // exp(-(x^2+y^2)/2t) I(z) = exp(-(x-y)^2/2t) * e^{-z} I(z)
  const double log_pref = std::log(y / t) + nu * std::log(y / x) - d * d / (2.0 * t);
  return std::exp(log_pref) * specfun::bessel_i_scaled(-nu, z);
}

double killed_density_expression(double nu, double a, double t, double x, double y) {
  check_index(nu);
  check_positive(a, "a");
  check_positive(t, "t");
  require(std::isfinite(x) && std::isfinite(y) && x >= a && y >= a,
          "killed density requires x, y >= a");
  const double p = (x - a) * (y - a);
  if (p == 0.0) return 0.0;
  const double d = x - y;
  return p / (t + p) * std::pow(x * x / (t + x * y), -nu - 0.5) / std::sqrt(t) *
         std::exp(-d * d / (2.0 * t));
}

Bracket killed_density_bound(double nu, double a, double t, double x, double y, double c0) {
  require(std::isfinite(c0) && c0 >= 1.0, "comparability constant must be >= 1");
  const double e = killed_density_expression(nu, a, t, x, y);
  return {e / c0, e * c0};
}

double hitting_density_bound(double nu, double a, double t, double x) {
  check_hitting(nu, a, x);
  check_positive(t, "t");
  const double m = -nu;
  const double d = x - a;
  return d / std::pow(t, 1.5) * std::pow(x, 2.0 * m - 1.0) / std::pow(t + a * x, m - 0.5) *
         std::exp(-d * d / (2.0 * t));
}

std::complex<double> hitting_time_transform(double nu, double a, double x,
                                            std::complex<double> lambda) {
  const double m = -nu;
  if (lambda == 0.0) return 1.0;
  const std::complex<double> z = std::sqrt(2.0 * lambda);
  // K(xz)/K(az) = exp(-(x-a)z) * [e^{xz}K(xz)] / [e^{az}K(az)]
  return std::pow(x / a, m) * std::exp(-(x - a) * z) * specfun::bessel_k_scaled(m, x * z) /
         specfun::bessel_k_scaled(m, a * z);
}

double hitting_time_transform(double nu, double a, double x, double lambda) {
  const double m = -nu;
  if (lambda == 0.0) return 1.0;
  const double z = std::sqrt(2.0 * lambda);
  return std::pow(x / a, m) * std::exp(-(x - a) * z) * specfun::bessel_k_scaled(m, x * z) /
         specfun::bessel_k_scaled(m, a * z);
}

double hitting_density(double nu, double a, double x, double t) {
  check_hitting(nu, a, x);
  check_positive(t, "t");
  const double v = laplace::talbot(
      [&](std::complex<double> s) { return hitting_time_transform(nu, a, x, s); }, t);
  return std::max(v, 0.0);
}

InversionResult hitting_density_numeric(double nu, double a, double x, double t) {
  check_hitting(nu, a, x);
  check_positive(t, "t");
  const double tal = laplace::talbot(
      [&](std::complex<double> s) { return hitting_time_transform(nu, a, x, s); }, t);
  const double ste =
      laplace::stehfest([&](double s) { return hitting_time_transform(nu, a, x, s); }, t);
  auto r = combine(tal, ste);
  if (!std::isfinite(tal)) throw NumericalError("hitting density inversion produced a non-finite value");
  return r;
}

InversionResult hitting_survival_numeric(double nu, double a, double x, double t) {
  check_hitting(nu, a, x);
  check_positive(t, "t");
  const double tal = laplace::talbot(
      [&](std::complex<double> s) { return (1.0 - hitting_time_transform(nu, a, x, s)) / s; }, t);
  const double ste = laplace::stehfest(
      [&](double s) { return (1.0 - hitting_time_transform(nu, a, x, s)) / s; }, t);
  if (!std::isfinite(tal)) throw NumericalError("survival inversion produced a non-finite value");
  auto r = combine(tal, ste);
  r.value = std::clamp(r.value, 0.0, 1.0);
  return r;
}

double killed_density_numeric(double nu, double a, double t, double x, double y) {
  check_hitting(nu, a, x);
  require(std::isfinite(y) && y > a, "killed density requires y > a");
  check_positive(t, "t");
  const double free = transition_density(nu, t, x, y);
  auto integrand = [&](double s) {
    if (s <= 0.0 || s >= t) return 0.0;
    return hitting_density(nu, a, x, s) * transition_density(nu, t - s, a, y);
  };
  quad::Options opt;
  opt.abs_tol = 1e-12 * std::max(free, 1e-300) + 1e-15;
  opt.rel_tol = 1e-9;
  opt.max_panels = 1000;
  // Geometric breakpoints towards both ends resolve the peaks of q near s ~ (x-a)^2
  // and of the free density near t - s ~ (y-a)^2 when t is large.
  const double scale = 1e-3 * std::min((x - a) * (x - a), (y - a) * (y - a));
  std::vector<double> br{0.0, t};
  for (double p = 0.5 * t; p > scale && br.size() < 120; p *= 0.5) {
    br.push_back(p);
    br.push_back(t - p);
  }
  std::sort(br.begin(), br.end());
  br.erase(std::unique(br.begin(), br.end()), br.end());
  const auto res = quad::integrate(integrand, br, opt);
  if (!res.converged && res.error > 1e-7 * std::max(free, 1e-300))
    throw NumericalError("killed density convolution did not converge (nu=" + std::to_string(nu) +
                         ", a=" + std::to_string(a) + ", t=" + std::to_string(t) +
                         ", x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                         ", error/free=" + std::to_string(res.error / std::max(free, 1e-300)) + ")");
  return free - res.value;
}

double joint_density(double nu, double x, double t, double u, double v) {
  require(std::isfinite(nu), "index must be finite");
  check_positive(x, "x");
  check_positive(u, "u");
  check_positive(v, "v");
  require(std::isfinite(t) && t >= specfun::kThetaMinTime && t <= specfun::kThetaMaxTime,
          "t must lie in the supported theta window [0.05, 50]");
  const double r = x * v / u;
  const double th = specfun::theta_hw(r, t);
  if (th == 0.0) return 0.0;
  const double log_pref =
      nu * std::log(v / x) - nu * nu * t / 2.0 - std::log(u * v) - (x * x + v * v) / (2.0 * u);
  return std::exp(log_pref) * th;
}

}  // namespace hypk::bessel

#include "hypk/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hypk/error.hpp"

namespace hypk::specfun {
namespace {

using std::numbers::pi;
constexpr double kEps = 1e-16;
constexpr int kMaxIter = 100000;
constexpr double kAsymptoticZ = 1e4;
constexpr double kSeriesZ = 20.0;  // I_nu by its power series below this

// Taylor coefficients of 1/Gamma(z) about 0 (c[k] multiplies z^k).
constexpr double kRGamma[] = {
    0.0,
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
};
constexpr int kRGammaTerms = sizeof(kRGamma) / sizeof(kRGamma[0]);

// Temme's auxiliary gamma quantities for |mu| <= 1/2.
struct TemmeGammas {
  double gam1;   // (1/G(1-mu) - 1/G(1+mu)) / (2 mu)
  double gam2;   // (1/G(1-mu) + 1/G(1+mu)) / 2
  double gampl;  // 1/G(1+mu)
  double gammi;  // 1/G(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  // even = sum_{k even >= 2} c_k mu^{k-2}, odd = sum_{k odd} c_k mu^{k-1}.
  const double m2 = mu * mu;
  double even = 0.0, odd = 0.0;
  for (int k = kRGammaTerms - 1; k >= 1; --k) {
    if (k % 2 == 0) {
      even = even * m2 + kRGamma[k];
    } else {
      odd = odd * m2 + kRGamma[k];
    }
  }
  TemmeGammas g;
  g.gam1 = -even;
  g.gam2 = odd;
  g.gampl = odd + mu * even;
  g.gammi = odd - mu * even;
  return g;
}

// Hankel coefficients a_k(nu) / z^k, summed with sign (+1 for K, -1 for I).
double hankel_sum(double nu, double z, double sign) {
  const double m = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (m - odd * odd) / (k * 8.0 * z) * sign;
    if (std::abs(next) > std::abs(term)) break;  // asymptotic series started diverging
    term = next;
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return sum;
}

// Power series for e^{-z} I_nu(z); all terms positive.
double bessel_i_series_scaled(double nu, double z) {
  const double q = 0.25 * z * z;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < kMaxIter; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    if (term < kEps * sum) break;
  }
  const double log_pref = nu * std::log(0.5 * z) - std::lgamma(nu + 1.0) - z;
  return std::exp(log_pref) * sum;
}

template <class T>
struct KPair {
  T k_mu;   // scaled K_mu
  T k_mu1;  // scaled K_{mu+1}
};

// Scaled K_mu, K_{mu+1} for |mu| <= 1/2 (Temme series for |x| < 2, Steed CF2 otherwise).
template <class T>
KPair<T> temme_k_pair(double mu, T x) {
  using std::abs;
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sinh;
  using std::sqrt;
  const T xi = T(1.0) / x;
  if (abs(x) < 2.0) {
    const T x2 = 0.5 * x;
    const double pimu = pi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    T d = -log(x2);
    T e = mu * d;
    const T fact2 = abs(e) < kEps ? T(1.0) : sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    T ff = fact * (g.gam1 * cosh(e) + g.gam2 * fact2 * d);
    T sum = ff;
    e = exp(e);
    T p = 0.5 * e / g.gampl;
    T q = 0.5 / (e * g.gammi);
    T c = 1.0;
    d = x2 * x2;
    T sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
      const double di = i;
      ff = (di * ff + p + q) / (di * di - mu * mu);
      c *= d / di;
      p /= (di - mu);
      q /= (di + mu);
      const T del = c * ff;
      sum += del;
      const T del1 = c * (p - di * ff);
      sum1 += del1;
      if (abs(del) < abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw NumericalError("bessel_k: Temme series failed to converge");
    const T scale = exp(x);
    return {sum * scale, sum1 * (2.0 * xi) * scale};
  }
  T b = 2.0 * (1.0 + x);
  T d = T(1.0) / b;
  T h = d, delh = d;
  T q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  T q = a1, c = a1;
  double a = -a1;
  T s = T(1.0) + q * delh;
  int i = 2;
  for (; i <= kMaxIter; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / double(i);
    const T qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = T(1.0) / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const T dels = q * delh;
    s += dels;
    if (abs(dels / s) < kEps) break;
  }
  if (i > kMaxIter) throw NumericalError("bessel_k: continued fraction CF2 failed to converge");
  h = a1 * h;
  const T k_mu = sqrt(pi / (2.0 * x)) / s;
  const T k_mu1 = k_mu * (mu + x + 0.5 - h) * xi;
  return {k_mu, k_mu1};
}

// Scaled K_nu from the pair at mu = nu - round(nu) by upward recurrence.
template <class T>
T k_scaled_impl(double nu, T x) {
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  KPair<T> p = temme_k_pair(mu, x);
  const T xi2 = 2.0 / x;
  T km = p.k_mu, k1 = p.k_mu1;
  for (int i = 1; i <= nl; ++i) {
    const T next = (mu + i) * xi2 * k1 + km;
    km = k1;
    k1 = next;
  }
  return km;
}

void check_order(double nu) {
  require(std::isfinite(nu) && std::abs(nu) < kMaxOrder, "Bessel order must satisfy |nu| < 50");
}

}  // namespace

ScaledIK bessel_ik_scaled(double nu, double z) {
  check_order(nu);
  require(nu >= 0.0, "bessel_ik_scaled: order must be nonnegative");
  require(z > 0.0 && std::isfinite(z), "Bessel argument must be positive");

  if (z > kAsymptoticZ) {
    return {hankel_sum(nu, z, -1.0) / std::sqrt(2.0 * pi * z),
            hankel_sum(nu, z, +1.0) * std::sqrt(pi / (2.0 * z))};
  }

  const double k_scaled = k_scaled_impl<double>(nu, z);
  if (z <= kSeriesZ) return {bessel_i_series_scaled(nu, z), k_scaled};

  // CF1 for I'_nu / I_nu, downward recurrence to mu, then the Wronskian.
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const double xi = 1.0 / z, xi2 = 2.0 * xi;
  constexpr double kFpMin = 1e-300;
  double h = std::max(nu * xi, kFpMin);
  double b = xi2 * nu, d = 0.0, c = h;
  int i = 1;
  for (; i <= kMaxIter; ++i) {
    b += xi2;
    d = 1.0 / (b + d);
    c = b + 1.0 / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  if (i > kMaxIter) throw NumericalError("bessel_i: continued fraction CF1 failed to converge");
  double ril = kFpMin, ripl = h * ril;
  const double ril1 = ril;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double ritemp = fact * ril + ripl;
    fact -= xi;
    ripl = fact * ritemp + ril;
    ril = ritemp;
  }
  const double f = ripl / ril;
  const KPair<double> kp = temme_k_pair(mu, z);
  const double kmup = mu * xi * kp.k_mu - kp.k_mu1;
  const double imu = xi / (f * kp.k_mu - kmup);
  return {imu * ril1 / ril, k_scaled};
}

double bessel_i_scaled(double nu, double z) {
  check_order(nu);
  require(nu >= 0.0, "bessel_i: order must be nonnegative");
  require(z > 0.0 && std::isfinite(z), "bessel_i: argument must be positive");
  if (z <= kSeriesZ) return bessel_i_series_scaled(nu, z);
  return bessel_ik_scaled(nu, z).i_scaled;
}

double bessel_i(double nu, double z) {
  const double s = bessel_i_scaled(nu, z);
  return z > 700.0 ? std::exp(std::log(s) + z) : s * std::exp(z);
}

double bessel_k_scaled(double nu, double z) {
  check_order(nu);
  require(z > 0.0 && std::isfinite(z), "bessel_k: argument must be positive");
  nu = std::abs(nu);
  if (z > kAsymptoticZ) return hankel_sum(nu, z, +1.0) * std::sqrt(pi / (2.0 * z));
  return k_scaled_impl<double>(nu, z);
}

double bessel_k(double nu, double z) {
  const double s = bessel_k_scaled(nu, z);
  return s * std::exp(-z);
}

std::complex<double> bessel_k_scaled(double nu, std::complex<double> w) {
  check_order(nu);
  require(std::isfinite(w.real()) && std::isfinite(w.imag()), "bessel_k: non-finite argument");
  require(!(w.imag() == 0.0 && w.real() <= 0.0), "bessel_k: argument on the branch cut");
  nu = std::abs(nu);
  return k_scaled_impl<std::complex<double>>(nu, w);
}

}  // namespace hypk::specfun

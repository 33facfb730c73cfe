#include "hypk/laplace.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hypk/error.hpp"

namespace hypk::laplace {

double talbot(const ComplexTransform& transform, double t, int nodes) {
  require(t > 0.0 && std::isfinite(t), "talbot: t must be positive");
  require(nodes >= 2, "talbot: need at least two nodes");
  using std::numbers::pi;
  const double m = nodes;
  const double r = 2.0 * m / (5.0 * t);
  double sum = 0.5 * std::exp(r * t) * transform({r, 0.0}).real();
  for (int k = 1; k < nodes; ++k) {
    const double theta = k * pi / m;
    const double cot = std::cos(theta) / std::sin(theta);
    const std::complex<double> s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    sum += (std::exp(t * s) * transform(s) * std::complex<double>(1.0, sigma)).real();
  }
  return r / m * sum;
}

namespace {

std::vector<long double> stehfest_weights(int n) {
  auto fact = [](int k) {
    long double f = 1.0L;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const int half = n / 2;
  std::vector<long double> v(n + 1, 0.0L);
  for (int k = 1; k <= n; ++k) {
    long double s = 0.0L;
    for (int j = (k + 1) / 2; j <= std::min(k, half); ++j) {
      s += std::pow(static_cast<long double>(j), half) * fact(2 * j) /
           (fact(half - j) * fact(j) * fact(j - 1) * fact(k - j) * fact(2 * j - k));
    }
    v[k] = ((k + half) % 2 == 0 ? 1.0L : -1.0L) * s;
  }
  return v;
}

}  // namespace

double stehfest(const RealTransform& transform, double t, int terms) {
  require(t > 0.0 && std::isfinite(t), "stehfest: t must be positive");
  require(terms >= 2 && terms % 2 == 0 && terms <= 30, "stehfest: terms must be even, <= 30");
  static thread_local int cached_n = -1;
  static thread_local std::vector<long double> weights;
  if (cached_n != terms) {
    weights = stehfest_weights(terms);
    cached_n = terms;
  }
  const long double ln2t = std::numbers::ln2_v<long double> / t;
  long double sum = 0.0L;
  for (int k = 1; k <= terms; ++k)
    sum += weights[k] * static_cast<long double>(transform(static_cast<double>(k * ln2t)));
  return static_cast<double>(ln2t * sum);
}

}  // namespace hypk::laplace

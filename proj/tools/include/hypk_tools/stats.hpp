#pragma once

#include <cstddef>
#include <vector>

namespace hypk::tools {

struct KsResult {
  double statistic = 0.0;  ///< sup |F1 - F2|
  double p_value = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic Kolmogorov distribution
/// and the Stephens small-sample correction. Empty samples give p = 1.
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

/// Complementary Kolmogorov distribution function Q(t) = 2 sum (-1)^{k-1} exp(-2 k^2 t^2).
double kolmogorov_q(double t);

/// (p - q) / sqrt(se_p^2 + se_q^2), zero when both are exact and equal.
double z_score(double p, double se_p, double q, double se_q);

}  // namespace hypk::tools

#pragma once

#include <complex>
#include <functional>

namespace hypk::laplace {

using ComplexTransform = std::function<std::complex<double>(std::complex<double>)>;
using RealTransform = std::function<double(double)>;

/// Fixed-Talbot inversion (Abate-Valko) of F at time t > 0 with M contour nodes.
double talbot(const ComplexTransform& transform, double t, int nodes = 32);

/// Gaver-Stehfest inversion with N (even) real abscissae, accumulated in long double.
double stehfest(const RealTransform& transform, double t, int terms = 16);

}  // namespace hypk::laplace

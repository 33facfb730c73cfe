#pragma once

#include <functional>
#include <span>

namespace hypk::quad {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_panels = 10000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod quadrature on [a, b].
Result integrate(const Integrand& f, double a, double b, const Options& opt = {});

/// Same, with the initial partition given by sorted breakpoints (at least two).
Result integrate(const Integrand& f, std::span<const double> breakpoints,
                 const Options& opt = {});

/// Integral over [a, inf) through x = a + s / (1 - s).
Result integrate_to_infinity(const Integrand& f, double a, const Options& opt = {});

/// Throws NumericalError when the tolerance was not met.
double integrate_checked(const Integrand& f, double a, double b, const Options& opt,
                         const char* what);

}  // namespace hypk::quad

#pragma once

#include <complex>

namespace hypk::bessel {

/// Transition density g^{(nu)}(t, x, y) of the Bessel process with index nu < 0
/// (killed at 0), with respect to dy.
double transition_density(double nu, double t, double x, double y);

/// Comparability constant used when an expression is turned into a bracket.
inline constexpr double kDefaultComparability = 4.0;

/// Two-sided comparable expression for the density of the process killed on
/// leaving (a, inf):
///   (x-a)(y-a)/(t+(x-a)(y-a)) * (x^2/(t+xy))^{|nu|-1/2} * t^{-1/2} * exp(-(x-y)^2/2t).
double killed_density_expression(double nu, double a, double t, double x, double y);

struct Bracket {
  double lower;
  double upper;
};

/// (expr / c0, expr * c0). Accepts x = a or y = a, where both ends vanish.
Bracket killed_density_bound(double nu, double a, double t, double x, double y,
                             double c0 = kDefaultComparability);

/// Comparable expression for the density of the first hitting time of a from x > a.
double hitting_density_bound(double nu, double a, double t, double x);

/// Laplace transform E^x[exp(-lambda tau_a)] = (x/a)^{-nu} K_|nu|(x sqrt(2 lambda)) / K_|nu|(a sqrt(2 lambda)).
std::complex<double> hitting_time_transform(double nu, double a, double x,
                                            std::complex<double> lambda);
double hitting_time_transform(double nu, double a, double x, double lambda);

/// Value of a numerical inversion together with its independent cross-check.
struct InversionResult {
  double value = 0.0;        ///< fixed-Talbot result
  double cross_check = 0.0;  ///< Gaver-Stehfest result
  double discrepancy = 0.0;  ///< |value - cross_check| / max(|value|, floor)
  bool trusted = false;      ///< discrepancy <= kInversionTolerance
};

inline constexpr double kInversionTolerance = 1e-5;

/// Density of tau_a under P^x by Laplace inversion, with diagnostics.
InversionResult hitting_density_numeric(double nu, double a, double x, double t);

/// Fast path: Talbot value only, clamped at zero.
double hitting_density(double nu, double a, double x, double t);

/// P^x(tau_a > t) by inversion of (1 - E^x[exp(-lambda tau_a)]) / lambda.
InversionResult hitting_survival_numeric(double nu, double a, double x, double t);

/// Killed density through the first-passage decomposition
///   g(t;x,y) - int_0^t q_a(s;x) g(t-s;a,y) ds.
/// Throws NumericalError when the convolution quadrature fails.
double killed_density_numeric(double nu, double a, double t, double x, double y);

/// Joint density of (A_x^{(nu)}(t), x exp(B_t + nu t)) at (u, v).
double joint_density(double nu, double x, double t, double u, double v);

}  // namespace hypk::bessel

#pragma once

#include <complex>

namespace hypk::specfun {

/// Orders with |nu| >= kMaxOrder are rejected.
inline constexpr double kMaxOrder = 50.0;

/// Exponentially scaled pair e^{-z} I_nu(z), e^{z} K_nu(z) for nu >= 0, z > 0.
struct ScaledIK {
  double i_scaled;
  double k_scaled;
};

ScaledIK bessel_ik_scaled(double nu, double z);

/// Modified Bessel function of the first kind, 0 <= nu < 50, z > 0.
double bessel_i(double nu, double z);
double bessel_i_scaled(double nu, double z);

/// Macdonald function K_nu(z), |nu| < 50, z > 0. Even in nu.
double bessel_k(double nu, double z);
double bessel_k_scaled(double nu, double z);

/// e^{w} K_nu(w) for complex w off the negative real axis (Re w > 0 intended).
std::complex<double> bessel_k_scaled(double nu, std::complex<double> w);

/// Density theta_r(t) whose Laplace transform in t is I_{sqrt(2 lambda)}(r).
/// Supported window: r > 0, t in [0.05, 50].
double theta_hw(double r, double t);

inline constexpr double kThetaMinTime = 0.05;
inline constexpr double kThetaMaxTime = 50.0;

struct LaplaceCheck {
  double ratio;      ///< integral / bessel
  double integral;   ///< int e^{-lambda t} theta_r(t) dt over the supported window
  double bessel;     ///< I_{sqrt(2 lambda)}(r)
  double error;      ///< quadrature error estimate of the integral
};

/// Compares the numerical Laplace transform of theta_r with I_{sqrt(2 lambda)}(r).
/// Throws NumericalError if the quadrature fails to converge.
LaplaceCheck laplace_check(double r, double lambda);

}  // namespace hypk::specfun

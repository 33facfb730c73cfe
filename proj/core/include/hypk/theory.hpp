#pragma once

#include <cstdint>
#include <functional>

#include "hypk/geometry.hpp"
#include "hypk/kernels.hpp"
#include "hypk/simulate.hpp"

namespace hypk::theory {

/// eta = sqrt(mu^2 + 2 lambda).
double eta(double mu, double lambda);

/// (x_n / y_n)^{mu - eta} * g_eta: the lambda-Green function from the Green function of
/// the process with index eta.
double reduce_green(double mu, double lambda, const HyperPoint& x, const HyperPoint& y,
                    double g_eta);

/// Same factor for Poisson kernels. Rejected for half-spaces when lambda > 0, where the
/// exit time is not almost surely finite in the sense needed by the identity.
double reduce_poisson(const DomainSpec& dom, double mu, double lambda, const HyperPoint& x,
                      const HyperPoint& y, double p_eta);

using ScalarField = std::function<double(const HyperPoint&)>;

/// Default finite-difference step, 1e-3 x_n.
double default_step(const HyperPoint& x);

/// Central-difference value of (1/2) Delta_mu f at x, where
/// Delta_mu = x_n^2 sum_k d^2/dx_k^2 - (2 mu - 1) x_n d/dx_n. Error O(h^2).
double apply_generator(double mu, const ScalarField& f, const HyperPoint& x, double h);

struct DirichletResult {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t n_paths = 0;
  /// E^x[f(X^{(eta)}(tau))] before the x_n^{mu-eta} factor.
  double harmonic_value = 0.0;
};

/// u(x) = x_n^{mu-eta} E^x[f(X^{(eta)}(tau))] for slab and strip domains. Paths stopped
/// at the ideal boundary contribute f at their terminal point; paths that exhaust the
/// horizon contribute zero.
DirichletResult dirichlet_solve(const DomainSpec& dom, double mu, double lambda,
                                const ScalarField& f, const HyperPoint& x,
                                const sim::SimConfig& cfg);

struct ScalingCheck {
  kernels::KernelEstimate green_base;    ///< G_U(x, y)
  kernels::KernelEstimate green_scaled;  ///< c^n G_{cU}(cx, cy)
  double green_z = 0.0;
  kernels::KernelEstimate poisson_base;    ///< P_U(x, region)
  kernels::KernelEstimate poisson_scaled;  ///< c^{n-1} P_{cU}(cx, c region)
  double poisson_z = 0.0;
};

/// Compares both sides of the dilation identities. The scaled run uses an independent
/// seed unless c = 1, in which case both runs coincide and z = 0.
ScalingCheck scaling_verify(const DomainSpec& dom, double mu, double c, const HyperPoint& x,
                            const HyperPoint& y, const kernels::FaceRegion& region,
                            const sim::SimConfig& cfg);

}  // namespace hypk::theory

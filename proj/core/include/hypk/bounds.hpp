#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypk/geometry.hpp"

namespace hypk::bounds {

// Two-sided estimate expressions for Green functions and Poisson kernels of
// S_{a,b}, S_{0,b} and D_a. On the diagonal x = y the Green expressions return +inf.

double green_bound_slab(double mu, int n, double a, double b, const HyperPoint& x,
                        const HyperPoint& y);

/// y must lie on `face` (x_1 = 0, x_1 = b or x_n = a) within a relative tolerance of 1e-9.
double poisson_bound_slab(double mu, int n, double a, double b, const HyperPoint& x,
                          const HyperPoint& y, BoundaryFace face);

double green_bound_strip(double mu, int n, double b, const HyperPoint& x, const HyperPoint& y);

/// For face == Bottom the boundary point is (y_1, ..., y_{n-1}, 0); the last
/// coordinate of y is ignored because a HyperPoint cannot sit on x_n = 0.
double poisson_bound_strip(double mu, int n, double b, const HyperPoint& x, const HyperPoint& y,
                           BoundaryFace face);

double green_bound_halfspace(double mu, int n, double a, const HyperPoint& x, const HyperPoint& y);

/// y must lie on the horocycle y_n = a.
double poisson_bound_halfspace(double mu, int n, double a, const HyperPoint& x,
                               const HyperPoint& y);

/// Interval factor from the Green estimate on a slab of width b (first coordinates in (0, b)).
double w_factor(const HyperPoint& x, const HyperPoint& y, double b = 1.0);
/// Its comparable closed form.
double w_estimate(const HyperPoint& x, const HyperPoint& y, double b = 1.0);

/// Parameters of the integral comparability lemma.
struct LemmaParams {
  double alpha = 0.0;
  double beta = 0.5;
  std::vector<double> gamma;
  std::vector<double> a;
  double b = 1.0;

  /// alpha >= 0, beta >= 1/2, b > 0, a_i > 0, gamma_i >= 0 except at most one in (-1/2, 0).
  void validate() const;
};

struct LemmaIntegral {
  double value = 0.0;
  double error = 0.0;  ///< difference between the last two step sizes
  int evaluations = 0;
};

/// int_0^inf (1+t)^alpha t^{-(beta+1)} exp(-b^2/2t - pi^2 t/2) prod (a_i+t)^{-gamma_i} dt.
LemmaIntegral lemma_integral(const LemmaParams& p, double rel_tol = 1e-10);
double lemma_lhs(const LemmaParams& p, double rel_tol = 1e-10);

/// e^{-b pi} b^{-2 beta} (1 + b^{alpha+beta-1/2+sum gamma}) / prod (a_i + a_i b + b^2)^{gamma_i}.
double lemma_rhs(const LemmaParams& p);

/// Closed form of the integral for k = 0 and alpha = 0: 2 (pi/b)^beta K_beta(b pi).
double lemma_macdonald(double beta, double b);

struct BoundRow {
  std::vector<double> inputs;
  double measured = 0.0;
  double bound_expr = 0.0;
  double ratio = 0.0;
  std::string note;  ///< e.g. "skipped=diagonal"; annotated rows do not enter sup/inf
};

struct BoundReport {
  std::vector<std::string> input_names;
  std::vector<BoundRow> points;
  double sup_ratio = 0.0;
  double inf_ratio = 0.0;
  double refinement_delta = 0.0;

  /// Recomputes sup_ratio / inf_ratio over rows without a note.
  void finalize();
  std::size_t active_rows() const;
};

/// Ratio lemma_lhs / lemma_rhs at each grid point. refinement_delta is the largest
/// relative change of a ratio when the quadrature tolerance goes from 1e-8 to 1e-14.
BoundReport lemma_certify(std::span<const LemmaParams> grid);

}  // namespace hypk::bounds

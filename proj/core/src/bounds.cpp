#include "hypk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hypk/error.hpp"
#include "hypk/parallel.hpp"
#include "hypk/specfun.hpp"

namespace hypk::bounds {

namespace {

using std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFaceTol = 1e-9;

void check_common(double mu, int n, const HyperPoint& x, const HyperPoint& y) {
  require(std::isfinite(mu) && mu > 0.0, "mu must be positive");
  require(n >= 2, "dimension n must be at least 2");
  require(x.dim() == static_cast<std::size_t>(n) && y.dim() == static_cast<std::size_t>(n),
          "points must have dimension n");
}

void check_width(double b) { require(std::isfinite(b) && b > 0.0, "b must be positive and finite"); }
void check_level(double a) { require(std::isfinite(a) && a > 0.0, "a must be positive and finite"); }

void check_in_slab(const HyperPoint& p, double a, double b, const char* name) {
  require(p[0] > 0.0 && p[0] < b, std::string(name) + " must satisfy 0 < x_1 < b");
  require(p.height() > a, std::string(name) + " must satisfy x_n > a");
}

// cosh of the hyperbolic distance between x and y after lowering both by a.
double cosh_shifted(const HyperPoint& x, const HyperPoint& y, double a) {
  return 1.0 + euclidean_distance_squared(x, y) / (2.0 * (x.height() - a) * (y.height() - a));
}

void check_face(const HyperPoint& y, double a, double b, BoundaryFace face) {
  switch (face) {
    case BoundaryFace::SideLow:
      require(std::abs(y[0]) <= kFaceTol * b, "y must lie on the face x_1 = 0");
      require(y.height() > a, "side-face point must lie above the bottom");
      break;
    case BoundaryFace::SideHigh:
      require(std::abs(y[0] - b) <= kFaceTol * b, "y must lie on the face x_1 = b");
      require(y.height() > a, "side-face point must lie above the bottom");
      break;
    case BoundaryFace::Bottom:
      require(std::abs(y.height() - a) <= kFaceTol * a, "y must lie on the face x_n = a");
      require(y[0] > 0.0 && y[0] < b, "bottom-face point must satisfy 0 < y_1 < b");
      break;
  }
}

}  // namespace

double green_bound_slab(double mu, int n, double a, double b, const HyperPoint& x,
                        const HyperPoint& y) {
  check_common(mu, n, x, y);
  check_level(a);
  check_width(b);
  check_in_slab(x, a, b, "x");
  check_in_slab(y, a, b, "y");
  if (x == y) return kInf;
  const double nd = n;
  const double d2 = euclidean_distance_squared(x, y);
  const double d = std::sqrt(d2);
  const double s = d / b;
  const double dd = delta(b, x[0]) * delta(b, y[0]);
  const double log_v = (mu - 0.5) * std::log(x.height()) - (mu + 1.5) * std::log(y.height()) -
                       pi * s - nd * std::log(d) + std::log(std::min(dd, d2)) -
                       std::log(s + cosh_shifted(x, y, a)) +
                       (0.5 * nd + mu + 1.5) * std::log1p(s) -
                       (mu - 0.5) * std::log(s + cosh_distance(x, y));
  return std::exp(log_v);
}

double poisson_bound_slab(double mu, int n, double a, double b, const HyperPoint& x,
                          const HyperPoint& y, BoundaryFace face) {
  check_common(mu, n, x, y);
  check_level(a);
  check_width(b);
  check_in_slab(x, a, b, "x");
  check_face(y, a, b, face);
  const double nd = n;
  const double d2 = euclidean_distance_squared(x, y);
  const double d = std::sqrt(d2);
  const double s = d / b;
  double log_v = (mu - 0.5) * std::log(x.height() / y.height()) - pi * s +
                 (mu + 0.5 * (nd + 3.0)) * std::log1p(s) - nd * std::log(d) -
                 (mu - 0.5) * std::log(s + cosh_distance(x, y));
  if (face == BoundaryFace::Bottom) {
    const double dd = delta(b, x[0]) * delta(b, y[0]);
    log_v += std::log(x.height() - y.height()) + std::log(std::min(dd, d2)) - std::log(d2);
  } else {
    log_v += std::log(delta(b, x[0])) - std::log(s + cosh_shifted(x, y, a));
  }
  return std::exp(log_v);
}

double green_bound_strip(double mu, int n, double b, const HyperPoint& x, const HyperPoint& y) {
  check_common(mu, n, x, y);
  check_width(b);
  check_in_slab(x, 0.0, b, "x");
  check_in_slab(y, 0.0, b, "y");
  if (x == y) return kInf;
  const double nd = n;
  const double d2 = euclidean_distance_squared(x, y);
  const double d = std::sqrt(d2);
  const double s = d / b;
  const double dd = delta(b, x[0]) * delta(b, y[0]);
  const double log_v = (mu - 0.5) * std::log(x.height()) - (mu + 1.5) * std::log(y.height()) -
                       pi * s - nd * std::log(d) + std::log(std::min(dd, d2)) +
                       (0.5 * nd + mu + 1.5) * std::log1p(s) -
                       (mu + 0.5) * std::log(s + cosh_distance(x, y));
  return std::exp(log_v);
}

double poisson_bound_strip(double mu, int n, double b, const HyperPoint& x, const HyperPoint& y,
                           BoundaryFace face) {
  check_common(mu, n, x, y);
  check_width(b);
  check_in_slab(x, 0.0, b, "x");
  const double nd = n;
  if (face == BoundaryFace::Bottom) {
    require(y[0] > 0.0 && y[0] < b, "bottom-face point must satisfy 0 < y_1 < b");
    double d2 = 0.0;
    for (int k = 0; k + 1 < n; ++k) d2 += (x[k] - y[k]) * (x[k] - y[k]);
    d2 += x.height() * x.height();
    const double d = std::sqrt(d2);
    const double s = d / b;
    const double dd = delta(b, x[0]) * delta(b, y[0]);
    return std::exp(2.0 * mu * std::log(x.height()) - pi * s + std::log(std::min(dd, d2)) +
                    (mu + 0.5 * (nd + 3.0)) * std::log1p(s) -
                    (2.0 * mu + nd + 1.0) * std::log(d));
  }
  check_face(y, 0.0, b, face);
  const double d2 = euclidean_distance_squared(x, y);
  const double d = std::sqrt(d2);
  const double s = d / b;
  return std::exp((mu - 0.5) * std::log(x.height() / y.height()) + std::log(delta(b, x[0])) -
                  pi * s + (mu + 0.5 * (nd + 3.0)) * std::log1p(s) - nd * std::log(d) -
                  (mu + 0.5) * std::log(s + cosh_distance(x, y)));
}

double green_bound_halfspace(double mu, int n, double a, const HyperPoint& x, const HyperPoint& y) {
  check_common(mu, n, x, y);
  check_level(a);
  require(x.height() > a && y.height() > a, "points must satisfy x_n > a");
  if (x == y) return kInf;
  const double nd = n;
  const double d = euclidean_distance(x, y);
  return std::exp((mu - 0.5) * std::log(x.height()) - (mu + 1.5) * std::log(y.height()) -
                  (nd - 2.0) * std::log(d) - std::log(cosh_shifted(x, y, a)) -
                  (mu - 0.5) * std::log(cosh_distance(x, y)));
}

double poisson_bound_halfspace(double mu, int n, double a, const HyperPoint& x,
                               const HyperPoint& y) {
  check_common(mu, n, x, y);
  check_level(a);
  require(x.height() > a, "x must satisfy x_n > a");
  require(std::abs(y.height() - a) <= kFaceTol * a, "y must lie on the face x_n = a");
  const double nd = n;
  const double d = euclidean_distance(x, y);
  return std::exp((mu - 0.5) * std::log(x.height() / y.height()) +
                  std::log(x.height() - y.height()) - nd * std::log(d) -
                  (mu - 0.5) * std::log(cosh_distance(x, y)));
}

double w_factor(const HyperPoint& x, const HyperPoint& y, double b) {
  check_width(b);
  require(x.dim() == y.dim(), "dimension mismatch");
  const double x1 = x[0] / b;
  const double y1 = y[0] / b;
  require(x1 > 0.0 && x1 < 1.0 && y1 > 0.0 && y1 < 1.0, "first coordinates must lie in (0, b)");
  const double d = euclidean_distance(x, y) / b;
  const double p = x1 * y1;
  const double q = (1.0 - x1) * (1.0 - y1);
  return 1.0 / ((p + p * d + d * d) * (q + q * d + d * d));
}

double w_estimate(const HyperPoint& x, const HyperPoint& y, double b) {
  check_width(b);
  require(x.dim() == y.dim(), "dimension mismatch");
  const double x1 = x[0] / b;
  const double y1 = y[0] / b;
  require(x1 > 0.0 && x1 < 1.0 && y1 > 0.0 && y1 < 1.0, "first coordinates must lie in (0, b)");
  const double d2 = euclidean_distance_squared(x, y) / (b * b);
  const double dd = delta(1.0, x1) * delta(1.0, y1);
  if (d2 == 0.0) return 1.0 / dd;
  return std::min(dd, d2) / (dd * d2 * (1.0 + d2));
}

// ------------------------------------------------------------------ lemma

void LemmaParams::validate() const {
  require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be >= 0");
  require(std::isfinite(beta) && beta >= 0.5, "beta must be >= 1/2");
  require(std::isfinite(b) && b > 0.0, "b must be positive");
  require(gamma.size() == a.size(), "gamma and a must have the same length");
  int negative = 0;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    require(std::isfinite(a[i]) && a[i] > 0.0, "every a_i must be positive");
    require(std::isfinite(gamma[i]), "gamma_i must be finite");
    if (gamma[i] < 0.0) {
      require(gamma[i] > -0.5, "a negative gamma_i must be greater than -1/2");
      ++negative;
    }
  }
  require(negative <= 1, "at most one gamma_i may be negative");
}

LemmaIntegral lemma_integral(const LemmaParams& p, double rel_tol) {
  p.validate();
  require(rel_tol > 0.0, "tolerance must be positive");
  // t = (b/pi) e^u turns b^2/2t + pi^2 t/2 into b pi cosh u; the factor e^{-b pi}
  // is pulled out and restored at the end.
  const double bp = p.b * pi;
  const double log_scale = std::log(p.b / pi);
  const std::size_t k = p.gamma.size();
  auto log_f = [&](double u) {
    const double log_t = log_scale + u;
    const double t = std::exp(log_t);
    double v = p.alpha * std::log1p(t) - p.beta * log_t - bp * (std::cosh(u) - 1.0);
    for (std::size_t i = 0; i < k; ++i) v -= p.gamma[i] * std::log(p.a[i] + t);
    return v;
  };
  double slope = p.alpha + p.beta + 1.0;
  for (double g : p.gamma) slope += std::abs(g);

  // Beyond |u| = span the factor exp(-b pi (cosh u - 1)) dominates every power factor
  // by more than e^{-200}. Locate the mode on a coarse grid inside that window, then
  // walk outwards until the integrand is negligible.
  double span = 1.0;
  while (bp * (std::cosh(span) - 1.0) < 200.0 + slope * (span + std::abs(log_scale) + 8.0))
    span += 0.5;
  double u_peak = 0.0;
  double log_peak = -std::numeric_limits<double>::infinity();
  for (double u = -span; u <= span; u += 0.5) {
    const double v = log_f(u);
    if (v > log_peak) {
      log_peak = v;
      u_peak = u;
    }
  }
  constexpr double kDrop = 80.0;
  auto negligible = [&](double u) {
    return log_f(u) < log_peak - kDrop && bp * std::sinh(std::abs(u)) > 2.0 * slope;
  };
  double lo = u_peak;
  while (!negligible(lo)) lo -= 0.5;
  double hi = u_peak;
  while (!negligible(hi)) hi += 0.5;

  auto f = [&](double u) { return std::exp(log_f(u) - log_peak); };
  double h = 0.5;
  int evals = 0;
  double sum = 0.0;
  const int n0 = static_cast<int>(std::ceil((hi - lo) / h));
  for (int i = 0; i <= n0; ++i) {
    sum += f(lo + i * h);
    ++evals;
  }
  double est = h * sum;
  double err = std::abs(est);
  int m = n0;
  for (int level = 0; level < 20; ++level) {
    // Halve the step: the new nodes are the midpoints of the old ones.
    double mid = 0.0;
    for (int i = 0; i < m; ++i) {
      mid += f(lo + (i + 0.5) * h);
      ++evals;
    }
    sum += mid;
    h *= 0.5;
    m *= 2;
    const double next = h * sum;
    err = std::abs(next - est);
    est = next;
    if (level >= 1 && err <= rel_tol * std::abs(est)) break;
  }
  if (err > std::max(rel_tol, 1e-13) * std::abs(est))
    throw NumericalError("lemma integral did not reach its tolerance");
  const double scale = std::exp(log_peak - bp);
  return {est * scale, err * scale, evals};
}

double lemma_lhs(const LemmaParams& p, double rel_tol) { return lemma_integral(p, rel_tol).value; }

double lemma_rhs(const LemmaParams& p) {
  p.validate();
  double sum_gamma = 0.0;
  double log_den = 0.0;
  for (std::size_t i = 0; i < p.gamma.size(); ++i) {
    sum_gamma += p.gamma[i];
    log_den += p.gamma[i] * std::log(p.a[i] + p.a[i] * p.b + p.b * p.b);
  }
  const double e = p.alpha + p.beta - 0.5 + sum_gamma;
  return std::exp(-p.b * pi - 2.0 * p.beta * std::log(p.b) - log_den) *
         (1.0 + std::pow(p.b, e));
}

double lemma_macdonald(double beta, double b) {
  require(std::isfinite(b) && b > 0.0, "b must be positive");
  // Scaled K keeps the value finite for large b pi.
  return 2.0 * std::exp(beta * std::log(pi / b) - b * pi) * specfun::bessel_k_scaled(beta, b * pi);
}

void BoundReport::finalize() {
  sup_ratio = 0.0;
  inf_ratio = std::numeric_limits<double>::infinity();
  bool any = false;
  for (const auto& r : points) {
    if (!r.note.empty()) continue;
    any = true;
    sup_ratio = std::max(sup_ratio, r.ratio);
    inf_ratio = std::min(inf_ratio, r.ratio);
  }
  if (!any) {
    sup_ratio = std::numeric_limits<double>::quiet_NaN();
    inf_ratio = std::numeric_limits<double>::quiet_NaN();
  }
}

std::size_t BoundReport::active_rows() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const BoundRow& r) { return r.note.empty(); }));
}

BoundReport lemma_certify(std::span<const LemmaParams> grid) {
  require(!grid.empty(), "lemma sweep grid is empty");
  const std::size_t k = grid.front().gamma.size();
  for (const auto& p : grid) {
    p.validate();
    require(p.gamma.size() == k, "all grid points must share the same k");
  }
  BoundReport rep;
  rep.input_names = {"alpha", "beta"};
  for (std::size_t i = 0; i < k; ++i) rep.input_names.push_back("gamma" + std::to_string(i + 1));
  for (std::size_t i = 0; i < k; ++i) rep.input_names.push_back("a" + std::to_string(i + 1));
  rep.input_names.push_back("b");

  rep.points.resize(grid.size());
  std::vector<double> deltas(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t idx) {
    const auto& p = grid[idx];
    BoundRow row;
    row.inputs = {p.alpha, p.beta};
    row.inputs.insert(row.inputs.end(), p.gamma.begin(), p.gamma.end());
    row.inputs.insert(row.inputs.end(), p.a.begin(), p.a.end());
    row.inputs.push_back(p.b);
    const double lhs = lemma_lhs(p, 1e-8);
    const double lhs_fine = lemma_lhs(p, 1e-14);
    const double rhs = lemma_rhs(p);
    row.measured = lhs;
    row.bound_expr = rhs;
    row.ratio = lhs / rhs;
    deltas[idx] = std::abs(lhs_fine / rhs - row.ratio) / row.ratio;
    rep.points[idx] = std::move(row);
  });
  rep.refinement_delta = *std::max_element(deltas.begin(), deltas.end());
  rep.finalize();
  return rep;
}

}  // namespace hypk::bounds
